//! Alternating generators written in terms of the essential ones, checked
//! against the alternating quotient.

use qonsager::elements::{essential_g, essential_w, NamedMorphism};
use qonsager::freealg::{Alphabet, DegreeScheme, Generator, NcPoly};
use qonsager::presentations::PresentationId;
use qonsager::quotient::build;

fn main() {
    let tq = build(PresentationId::AltFull, 7, 0).unwrap();
    for n in -3i64..=4 {
        let e = essential_w(n);
        let img = NamedMorphism::Natural.apply(&e).unwrap();
        let ok = tq.equal_mod(&img, &NcPoly::gen(Alphabet::Alt, Generator::w(n))).unwrap();
        println!(
            "W[{n:>2}]: degree {}, {:>3} terms, agrees in ALT_FULL: {ok}",
            e.degree(DegreeScheme::EssDeg).unwrap(),
            e.len()
        );
    }
    println!("\nW[-1] = {}", essential_w(-1));
    println!("W[2]  = {}", essential_w(2));
    println!("G[1]  = {}", essential_g(1));
}
