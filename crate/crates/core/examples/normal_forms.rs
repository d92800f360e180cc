//! Normal forms and equality tests in truncated quotients.

use qonsager::cli::parse;
use qonsager::presentations::PresentationId;
use qonsager::quotient::{build_certified, Limits};

fn show(p: PresentationId, d: u32, exprs: &[&str]) {
    let tq = build_certified(p, d, Limits::default()).unwrap();
    println!("{p}, D={d}, H={}, dims {:?}", tq.headroom(), tq.dims());
    for e in exprs {
        let x = parse(e, p.alphabet()).unwrap();
        println!("  {e}\n    -> {}", tq.normal_form(&x).unwrap());
    }
}

fn main() {
    show(PresentationId::AltFull, 4, &["W[1]*W[0]", "G[1]*W[0]", "W[-1]*W[0] - W[0]*W[-1]"]);
    show(PresentationId::OqDg, 4, &["W[1]*W[0]*W[0]*W[0]", "[W[0], [W[0], [W[0], W[1]]_q]_q-1]"]);
    show(PresentationId::EssCompact, 3, &["[W[0], Gt[1]]", "W[1]*W[0]"]);

    let tq = build_certified(PresentationId::AltFull, 4, Limits::default()).unwrap();
    let a = parse("W[2]*W[0]", PresentationId::AltFull.alphabet()).unwrap();
    let b = parse("W[0]*W[2]", PresentationId::AltFull.alphabet()).unwrap();
    println!("\nW[2]*W[0] == W[0]*W[2] in ALT_FULL: {}", tq.equal_mod(&a, &b).unwrap());
}
