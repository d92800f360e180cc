use qonsager::freealg::{
    commutator, q_commutator, Alphabet, DegreeScheme, Generator, NcPoly, Word,
};
use qonsager::presentations::{instantiate, qdg_relation, relation_degree, PresentationId};
use qonsager::ring::{consts, LaurentPoly, RationalFunction};

fn labels(p: PresentationId, bound: u32) -> Vec<String> {
    instantiate(p, bound).iter().map(|r| r.label()).collect()
}

#[test]
fn alt_full_degree_two_has_single_relation() {
    let rels = instantiate(PresentationId::AltFull, 2);
    assert_eq!(rels.len(), 1, "{:?}", labels(PresentationId::AltFull, 2));
    // [2]_q [W0,W1] - Gt[1] + G[1]
    let a = Alphabet::Alt;
    let w0 = NcPoly::gen(a, Generator::w(0));
    let w1 = NcPoly::gen(a, Generator::w(1));
    let expect = commutator(&w0, &w1).unwrap().scale(&consts::qint(2)) - NcPoly::gen(a, Generator::gt(1))
        + NcPoly::gen(a, Generator::g(1));
    let got = &rels[0].poly;
    assert!(got == &expect || got == &-&expect);
    assert!(instantiate(PresentationId::AltFull, 1).is_empty());
}

#[test]
fn oq_relations_have_length_four() {
    assert!(instantiate(PresentationId::OqDg, 3).is_empty());
    let rels = instantiate(PresentationId::OqDg, 4);
    assert_eq!(rels.len(), 2);
    for r in &rels {
        assert_eq!(relation_degree(&r.poly, DegreeScheme::LenDeg), 4);
    }
}

/// Expand the q-Dolan/Grady polynomial by hand and compare.
#[test]
fn qdg_expansion() {
    let a = Alphabet::Oq;
    let x = NcPoly::gen(a, Generator::w(0));
    let y = NcPoly::gen(a, Generator::w(1));
    let three = LaurentPoly::from_int_terms(&[(2, 1), (0, 1), (-2, 1)]);
    let three = RationalFunction::from_laurent(&three);
    // (q^2 - q^-2)^2 = q^4 - 2 + q^-4
    let c = RationalFunction::from_laurent(&LaurentPoly::from_int_terms(&[(4, 1), (0, -2), (-4, 1)]));
    let w = |s: &[i64]| Word::from_slice(&s.iter().map(|&n| Generator::w(n)).collect::<Vec<_>>());
    let expect = NcPoly::from_terms(
        a,
        [
            (w(&[0, 0, 0, 1]), RationalFunction::one()),
            (w(&[0, 0, 1, 0]), three.neg()),
            (w(&[0, 1, 0, 0]), three.clone()),
            (w(&[1, 0, 0, 0]), RationalFunction::from_int(-1)),
            (w(&[1, 0]), c.neg()),
            (w(&[0, 1]), c.clone()),
        ],
    );
    assert_eq!(qdg_relation(&x, &y), expect);
}

#[test]
fn ess_degree_three_is_the_low_pair() {
    let got = labels(PresentationId::EssCompact, 3);
    assert_eq!(got, vec!["low_left".to_string(), "low_right".to_string()]);
    let got = labels(PresentationId::EssCompactSigma, 3);
    assert_eq!(got, vec!["low_left".to_string(), "low_right".to_string()]);
}

/// The recursive pair with the scalar in place of the index-0 generator is a
/// multiple of the low relations.
#[test]
fn recursive_pair_at_zero_reproduces_low_relations() {
    let a = Alphabet::Ess;
    let x = NcPoly::gen(a, Generator::w(0));
    let y = NcPoly::gen(a, Generator::w(1));
    let g0 = NcPoly::scalar(a, consts::gg0());
    let g1 = NcPoly::gen(a, Generator::gt(1));
    let c = consts::qdg();
    let br = |u: &NcPoly, v: &NcPoly| commutator(u, v).unwrap();
    let qbr = |u: &NcPoly, v: &NcPoly| q_commutator(u, v).unwrap();
    let first = br(&g1, &x).scale(&c) - br(&x, &qbr(&x, &qbr(&y, &g0)));
    let second = br(&y, &g1).scale(&c) - br(&qbr(&qbr(&g0, &x), &y), &y);
    let rels = instantiate(PresentationId::EssCompact, 3);
    let low_left = &rels[0].poly;
    let low_right = &rels[1].poly;
    assert_eq!(first, low_left.scale(&c.neg()));
    assert_eq!(second, low_right.scale(&c.neg()));
}

#[test]
fn relation_degrees_respect_bound() {
    for p in PresentationId::ALL {
        for bound in 0..=6 {
            for r in instantiate(p, bound) {
                assert!(relation_degree(&r.poly, p.scheme()) <= bound, "{p} {}", r.label());
                assert_eq!(r.poly.alphabet(), p.alphabet());
            }
        }
    }
}

#[test]
fn no_duplicates_up_to_sign() {
    for p in PresentationId::ALL {
        let rels = instantiate(p, 6);
        for (i, a) in rels.iter().enumerate() {
            for b in &rels[i + 1..] {
                assert!(a.poly != b.poly && a.poly != -&b.poly, "{p}: {} vs {}", a.label(), b.label());
            }
        }
    }
}

#[test]
fn instantiation_is_deterministic() {
    for p in PresentationId::ALL {
        let a: Vec<String> = instantiate(p, 7).iter().map(|r| r.to_string()).collect();
        let b: Vec<String> = instantiate(p, 7).iter().map(|r| r.to_string()).collect();
        assert_eq!(a, b);
    }
}

#[test]
fn reduced_list_is_a_subset() {
    let full: Vec<_> = instantiate(PresentationId::AltFull, 6).into_iter().map(|r| r.poly).collect();
    let reduced = instantiate(PresentationId::AltReduced, 6);
    assert!(reduced.len() < full.len());
    for r in reduced {
        assert!(full.contains(&r.poly) || full.contains(&-&r.poly), "{}", r.label());
    }
}

#[test]
fn poly_z_commutators() {
    let rels = instantiate(PresentationId::PolyZ, 4);
    // pairs m < n <= 4 with m + n <= 4: (1,2), (1,3)
    assert_eq!(rels.len(), 2);
}

#[test]
fn names_round_trip() {
    for p in PresentationId::ALL {
        assert_eq!(p.name().parse::<PresentationId>().unwrap(), p);
        assert_eq!(p.name().to_lowercase().parse::<PresentationId>().unwrap(), p);
    }
    assert!("nope".parse::<PresentationId>().is_err());
}
