//! Words, degrees and the named (anti)automorphisms.

use qonsager::elements::NamedMorphism;
use qonsager::freealg::{
    commutator, enumerate_words_by_degree, q_commutator, Alphabet, DegreeScheme, Generator, NcPoly,
};

fn main() {
    let levels = enumerate_words_by_degree(Alphabet::Alt, DegreeScheme::AltDeg, 6).unwrap();
    for (d, ws) in levels.iter().enumerate() {
        let sample: Vec<String> = ws.iter().take(4).map(|w| w.to_string()).collect();
        println!("degree {d}: {:>4} words  {}", ws.len(), sample.join(", "));
    }

    let a = Alphabet::Alt;
    let x = NcPoly::gen(a, Generator::w(-1)) * NcPoly::gen(a, Generator::g(2))
        + NcPoly::gen(a, Generator::w(2));
    println!("\nx = {x}  (degree {})", x.degree(DegreeScheme::AltDeg).unwrap());
    for m in [NamedMorphism::SigmaAlt, NamedMorphism::DaggerAlt, NamedMorphism::TauAlt] {
        println!("{:>6}(x) = {}", m.name(), m.apply(&x).unwrap());
    }

    let w0 = NcPoly::gen(Alphabet::Oq, Generator::w(0));
    let w1 = NcPoly::gen(Alphabet::Oq, Generator::w(1));
    println!("\n[W0,W1]   = {}", commutator(&w0, &w1).unwrap());
    println!("[W0,W1]_q = {}", q_commutator(&w0, &w1).unwrap());
}
