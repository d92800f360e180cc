//! List the relation instances of a presentation up to a degree bound.
//!
//! Usage: `presentations [PRESENTATION] [D]`

use qonsager::presentations::{instantiate, relation_degree, PresentationId};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let p: PresentationId = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(PresentationId::EssCompact);
    let d: u32 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(4);
    let rels = instantiate(p, d);
    println!("{p} ({} over {:?}), {} relations of degree <= {d}", p.alphabet(), p.scheme(), rels.len());
    for r in rels {
        let deg = relation_degree(&r.poly, p.scheme());
        let text = r.poly.to_string();
        let text = if text.len() > 120 { format!("{}...", &text[..117]) } else { text };
        println!("  [{deg}] {:<24} {text}", r.label());
    }
}
