use qonsager::elements::{
    b_delta, b_delta_element, b_delta_element_in, b_element, b_element_degree, b_element_in, essential_g,
    essential_gt_sigma, essential_w, essential_w_sigma, partitions, pbw_count, pbw_level_count, tilde_b_delta,
    tilde_b_delta_element, tilde_b_element, w_closed_form, w_closed_form_degree, BDeltaFormula, BKind,
    ClosedFormVariant, NamedMorphism, PartitionIndex,
};
use qonsager::freealg::{commutator, q_commutator, Alphabet, DegreeScheme, Generator, NcPoly};
use qonsager::presentations::PresentationId;
use qonsager::quotient::build;
use qonsager::ring::{LaurentPoly, RationalFunction};

const E: Alphabet = Alphabet::Ess;

fn lp(ts: &[(i32, i64)]) -> RationalFunction {
    RationalFunction::from_laurent(&LaurentPoly::from_int_terms(ts))
}

fn w0() -> NcPoly {
    NcPoly::gen(E, Generator::w(0))
}

fn w1() -> NcPoly {
    NcPoly::gen(E, Generator::w(1))
}

fn gt(k: u32) -> NcPoly {
    NcPoly::gen(E, Generator::gt(k))
}

/// `1 / (q^4 - 2 + q^-4)`
fn inv_c() -> RationalFunction {
    RationalFunction::one().checked_div(&lp(&[(4, 1), (0, -2), (-4, 1)])).unwrap()
}

enum Br {
    /// `[Gt[k], W0]_q`
    L(u32),
    /// `[W1, Gt[k]]_q`
    R(u32),
}

fn expand(start: NcPoly, brs: &[Br]) -> NcPoly {
    let mut out = start;
    for b in brs {
        let x = match *b {
            Br::L(k) => q_commutator(&gt(k), &w0()).unwrap(),
            Br::R(k) => q_commutator(&w1(), &gt(k)).unwrap(),
        };
        out = out - x.scale(&inv_c());
    }
    out
}

/// The explicit expansions, written out one by one.
#[test]
fn essential_w_matches_explicit_expansions() {
    use Br::*;
    let cases: Vec<(i64, NcPoly)> = vec![
        (-1, expand(w1(), &[L(1)])),
        (3, expand(w1(), &[L(1), R(2)])),
        (-3, expand(w1(), &[L(1), R(2), L(3)])),
        (5, expand(w1(), &[L(1), R(2), L(3), R(4)])),
        (-5, expand(w1(), &[L(1), R(2), L(3), R(4), L(5)])),
        (2, expand(w0(), &[R(1)])),
        (-2, expand(w0(), &[R(1), L(2)])),
        (4, expand(w0(), &[R(1), L(2), R(3)])),
        (-4, expand(w0(), &[R(1), L(2), R(3), L(4)])),
        (6, expand(w0(), &[R(1), L(2), R(3), L(4), R(5)])),
    ];
    for (n, want) in cases {
        assert_eq!(essential_w(n), want, "W[{n}]");
    }
    assert_eq!(essential_w(0), w0());
    assert_eq!(essential_w(1), w1());
}

#[test]
fn essential_w_degrees() {
    for n in -5i64..=6 {
        let d = essential_w(n).degree(DegreeScheme::EssDeg).unwrap();
        let k = if n <= 0 { -n } else { n - 1 };
        assert_eq!(d as i64, 2 * k + 1, "W[{n}]");
    }
}

#[test]
fn essential_g_small_cases() {
    let two = lp(&[(1, 1), (-1, 1)]);
    let g1 = gt(1) + commutator(&w1(), &w0()).unwrap().scale(&two);
    assert_eq!(essential_g(1), g1);
    let wm1 = w1() - q_commutator(&gt(1), &w0()).unwrap().scale(&inv_c());
    let g2 = gt(2) + commutator(&w1(), &wm1).unwrap().scale(&two);
    assert_eq!(essential_g(2), g2);
    // -(q + q^-1)(q^2 - q^-2)
    let g0 = lp(&[(3, -1), (1, -1), (-1, 1), (-3, 1)]);
    assert_eq!(essential_g(0).as_scalar(), Some(g0));
}

/// In the alternating algebra the essential expressions agree with the
/// generators they name.
#[test]
fn natural_images_agree_in_alt_quotient() {
    let tq = build(PresentationId::AltFull, 5, 0).unwrap();
    for n in -2i64..=3 {
        let img = NamedMorphism::Natural.apply(&essential_w(n)).unwrap();
        let w = NcPoly::gen(Alphabet::Alt, Generator::w(n));
        assert!(tq.equal_mod(&img, &w).unwrap(), "W[{n}]");
    }
    for k in 1..=2 {
        let img = NamedMorphism::Natural.apply(&essential_g(k)).unwrap();
        let g = NcPoly::gen(Alphabet::Alt, Generator::g(k));
        assert!(tq.equal_mod(&img, &g).unwrap(), "G[{k}]");
    }
}

#[test]
fn mirrored_expressions() {
    for n in -3i64..=4 {
        let m = essential_w_sigma(n);
        assert_eq!(m.alphabet(), Alphabet::EssSigma);
        assert_eq!(NamedMorphism::SigmaEss.apply(&essential_w(1 - n)).unwrap(), m);
    }
    assert_eq!(essential_w_sigma(0), NcPoly::gen(Alphabet::EssSigma, Generator::w(0)));
    assert_eq!(essential_gt_sigma(1).alphabet(), Alphabet::EssSigma);
}

fn kconst() -> RationalFunction {
    // q / ((q - q^-1)(q^2 - q^-2)) = q / (q^3 - q - q^-1 + q^-3)
    lp(&[(1, 1)]).checked_div(&lp(&[(3, 1), (1, -1), (-1, -1), (-3, 1)])).unwrap()
}

#[test]
fn b_elements_by_hand() {
    let bd = (&w1() * &w0()).scale(&lp(&[(-2, 1)])) - &w0() * &w1();
    assert_eq!(b_delta(), bd);
    assert_eq!(b_element(BKind::Alpha0, 0), w0());
    assert_eq!(b_element(BKind::Alpha1, 0), w1());
    let k = kconst();
    let a0_1 = w1() + commutator(&bd, &w0()).unwrap().scale(&k);
    let a1_1 = w0() - commutator(&bd, &w1()).unwrap().scale(&k);
    assert_eq!(b_element(BKind::Alpha0, 1), a0_1);
    assert_eq!(b_element(BKind::Alpha1, 1), a1_1);
    let a0_2 = w0() + commutator(&bd, &a0_1).unwrap().scale(&k);
    let a1_2 = w1() - commutator(&bd, &a1_1).unwrap().scale(&k);
    assert_eq!(b_element(BKind::Alpha0, 2), a0_2);
    assert_eq!(b_element(BKind::Alpha1, 2), a1_2);
    // Imaginary vectors: both formulas give B_delta at n = 1.
    assert_eq!(b_delta_element(1, BDeltaFormula::ViaAlpha1), bd);
    assert_eq!(b_delta_element(1, BDeltaFormula::ViaAlpha0), bd);
    let qm2 = lp(&[(-2, 1)]);
    let via1 = (&a1_1 * &w0()).scale(&qm2) - &w0() * &a1_1
        + (&w1() * &w1()).scale(&lp(&[(-2, 1), (0, -1)]));
    assert_eq!(b_delta_element(2, BDeltaFormula::ViaAlpha1), via1);
}

#[test]
fn negative_index_extension() {
    for n in 0..=4i64 {
        assert_eq!(b_element(BKind::Alpha0, -n - 1), b_element(BKind::Alpha1, n));
        assert_eq!(b_element(BKind::Alpha1, -n - 1), b_element(BKind::Alpha0, n));
        assert_eq!(b_element_degree(-n - 1), b_element_degree(n));
    }
}

#[test]
fn b_degrees() {
    for n in 0..=4i64 {
        for kind in [BKind::Alpha0, BKind::Alpha1] {
            let d = b_element(kind, n).degree(DegreeScheme::EssDeg).unwrap();
            assert_eq!(d, b_element_degree(n));
        }
    }
}

#[test]
fn tilde_family_is_the_mirror() {
    let s = NamedMorphism::SigmaEss;
    for n in -4i64..=4 {
        for kind in [BKind::Alpha0, BKind::Alpha1] {
            assert_eq!(tilde_b_element(kind, n), s.apply(&b_element(kind, n)).unwrap(), "{kind:?} {n}");
        }
    }
    assert_eq!(tilde_b_delta(), s.apply(&b_delta()).unwrap());
    for n in 1..=3 {
        for f in [BDeltaFormula::ViaAlpha1, BDeltaFormula::ViaAlpha0] {
            assert_eq!(tilde_b_delta_element(n, f), s.apply(&b_delta_element(n, f)).unwrap());
        }
    }
}

/// The antiautomorphism swapping `W0`, `W1` exchanges the two real families
/// exactly, and fixes the imaginary ones modulo the relations.
#[test]
fn tau_on_root_vectors() {
    let tau = NamedMorphism::TauOq;
    let o = Alphabet::Oq;
    for n in 0..=3i64 {
        let a0 = b_element_in(o, BKind::Alpha0, n);
        let a1 = b_element_in(o, BKind::Alpha1, n);
        assert_eq!(tau.apply(&a0).unwrap(), a1);
    }
    let tq = build(PresentationId::OqDg, 6, 0).unwrap();
    for n in 1..=3 {
        let x = b_delta_element_in(o, n, BDeltaFormula::ViaAlpha1);
        let y = b_delta_element_in(o, n, BDeltaFormula::ViaAlpha0);
        assert_eq!(tau.apply(&x).unwrap(), y);
        assert!(tq.equal_mod(&x, &y).unwrap(), "B_delta {n}");
    }
}

#[test]
fn closed_forms_at_zero_are_exact() {
    for v in ClosedFormVariant::ALL {
        assert_eq!(w_closed_form(0, v), v.target(0), "{v}");
    }
}

#[test]
fn closed_forms_at_one_in_quotient() {
    for v in ClosedFormVariant::ALL {
        let p = if v.is_sigma() { PresentationId::EssCompactSigma } else { PresentationId::EssCompact };
        let tq = build(p, w_closed_form_degree(1), 0).unwrap();
        assert!(tq.equal_mod(&w_closed_form(1, v), &v.target(1)).unwrap(), "{v}");
    }
}

#[test]
fn tau_relates_left_and_right_closed_forms() {
    let tau = NamedMorphism::TauAlt;
    let nat = NamedMorphism::Natural;
    for n in 0..=2 {
        let left = tau.apply(&nat.apply(&w_closed_form(n, ClosedFormVariant::WWaltMinus)).unwrap()).unwrap();
        let right = nat.apply(&w_closed_form(n, ClosedFormVariant::WWaltaPlus)).unwrap();
        assert_eq!(left, right, "n={n}");
        let left = tau.apply(&nat.apply(&w_closed_form(n, ClosedFormVariant::WWaltPlus)).unwrap()).unwrap();
        let right = nat.apply(&w_closed_form(n, ClosedFormVariant::WWaltaMinus)).unwrap();
        assert_eq!(left, right, "n={n}");
    }
}

#[test]
fn variant_names_round_trip() {
    for v in ClosedFormVariant::ALL {
        assert_eq!(v.name().parse::<ClosedFormVariant>().unwrap(), v);
    }
    assert_eq!(ClosedFormVariant::WWaltMinus.target_index(3), -3);
    assert_eq!(ClosedFormVariant::WWaltPlus.target_index(3), 4);
}

#[test]
fn partition_listing() {
    let p4: Vec<String> = partitions(4).iter().map(|p| p.to_string()).collect();
    assert_eq!(p4, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
    let lam = PartitionIndex::new(vec![1, 3, 1]);
    assert_eq!(lam.parts(), &[3, 1, 1]);
    assert_eq!(lam.size(), 5);
    assert_eq!(lam.multiplicities(), vec![(3, 1), (1, 2)]);
    assert!(partitions(0).len() == 1 && partitions(0)[0].is_empty());
}

/// Coefficients of `prod_j (1 - t^j)^-2` by repeated series division.
#[test]
fn pbw_counts_match_series() {
    let n = 11;
    let mut s = vec![0u64; n];
    s[0] = 1;
    for d in 1..n {
        for _ in 0..2 {
            for i in d..n {
                s[i] += s[i - d];
            }
        }
    }
    for d in 0..n as u32 {
        assert_eq!(pbw_level_count(DegreeScheme::AltDeg, d), s[d as usize]);
    }
    assert_eq!(pbw_count(DegreeScheme::AltDeg, 8), 434);
    assert_eq!(pbw_count(DegreeScheme::ZDeg, 5), 19);
}
