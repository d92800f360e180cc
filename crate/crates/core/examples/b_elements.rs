//! Root-vector analogs in the subalgebra generated by W[0], W[1], and the
//! closed forms for W[-n], W[n+1] built from them.

use qonsager::elements::{
    b_delta_element_in, b_element_in, w_closed_form, w_closed_form_degree, BDeltaFormula, BKind, ClosedFormVariant,
};
use qonsager::freealg::{Alphabet, DegreeScheme};
use qonsager::presentations::PresentationId;
use qonsager::quotient::build;

fn main() {
    let oq = Alphabet::Oq;
    for n in 0..=3 {
        for kind in [BKind::Alpha0, BKind::Alpha1] {
            let b = b_element_in(oq, kind, n);
            println!("B[{},{n}]: length {}, {} terms", kind.name(), b.degree(DegreeScheme::LenDeg).unwrap(), b.len());
        }
    }
    println!("B[a0,1] = {}", b_element_in(oq, BKind::Alpha0, 1));

    let tq = build(PresentationId::OqDg, 6, 0).unwrap();
    for n in 1..=3 {
        let x = b_delta_element_in(oq, n, BDeltaFormula::ViaAlpha1);
        let y = b_delta_element_in(oq, n, BDeltaFormula::ViaAlpha0);
        println!("Bd[{n}]: formulas agree modulo OQ_DG: {}", tq.equal_mod(&x, &y).unwrap());
    }

    let n = 2;
    for v in ClosedFormVariant::ALL {
        let p = if v.is_sigma() { PresentationId::EssCompactSigma } else { PresentationId::EssCompact };
        let q = build(p, w_closed_form_degree(n), 0).unwrap();
        let ok = q.equal_mod(&w_closed_form(n, v), &v.target(n)).unwrap();
        println!("{:<14} n={n}: equals W[{}]: {ok}", v.name(), v.target_index(n));
    }
}
