use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use qonsager::ring::{
    laurent_arith, q_int, ratfunc_arith, rho, IntPoly, LaurentOp, LaurentPoly, RatOp, RationalFunction, RingError,
};

fn small_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-4i64..=4, 1..4).prop_map(|v| IntPoly::from_i64s(&v))
}

/// Random field element `q^s * n / m` with small coefficients.
fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (-3i32..=3, small_poly(), small_poly()).prop_map(|(s, n, m)| {
        let m = if m.is_zero() { IntPoly::one() } else { m };
        RationalFunction::from_parts(s, n, m)
    })
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-5i32..=5, -6i64..=6), 0..5).prop_map(|ts| LaurentPoly::from_int_terms(&ts))
}

fn horner(cs: &[BigRational], x: &BigRational) -> BigRational {
    cs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn pow(x: &BigRational, e: i32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Independent oracle: evaluation at a rational point through the public
/// `(shift, num, den)` view.
fn eval(r: &RationalFunction, x: &BigRational) -> Option<BigRational> {
    let d = horner(&r.den(), x);
    if d.is_zero() {
        return None;
    }
    Some(pow(x, r.shift()) * horner(&r.num(), x) / d)
}

fn points() -> Vec<BigRational> {
    vec![
        BigRational::new(BigInt::from(2), BigInt::from(1)),
        BigRational::new(BigInt::from(3), BigInt::from(2)),
        BigRational::new(BigInt::from(-5), BigInt::from(7)),
    ]
}

fn check_canonical(r: &RationalFunction) {
    let den = r.den();
    assert!(den.last().unwrap().is_one(), "den monic");
    assert!(!den[0].is_zero(), "den constant term");
    let num = r.num();
    if !num.is_empty() {
        assert!(!num[0].is_zero(), "num constant term");
    }
    assert_eq!(&r.canonicalize(), r);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.recip().unwrap()).is_one());
        }
        for r in [&a + &b, &a * &b, &a - &c] {
            check_canonical(&r);
        }
    }

    #[test]
    fn arithmetic_matches_evaluation(a in ratfunc(), b in ratfunc()) {
        for x in points() {
            let (Some(ea), Some(eb)) = (eval(&a, &x), eval(&b, &x)) else { continue };
            prop_assert_eq!(eval(&(&a + &b), &x).unwrap(), &ea + &eb);
            prop_assert_eq!(eval(&(&a * &b), &x).unwrap(), &ea * &eb);
            if !b.is_zero() && !eb.is_zero() {
                let q = ratfunc_arith(&a, &b, RatOp::Div).unwrap();
                prop_assert_eq!(eval(&q, &x).unwrap(), &ea / &eb);
            }
        }
    }

    #[test]
    fn canonicalization_idempotent(s in -4i32..=4, n in small_poly(), m in small_poly(), k in small_poly()) {
        let m = if m.is_zero() { IntPoly::one() } else { m };
        let k = if k.is_zero() { IntPoly::one() } else { k };
        let r = RationalFunction::from_parts(s, n.clone(), m.clone());
        check_canonical(&r);
        prop_assert_eq!(r.canonicalize().canonicalize(), r.canonicalize());
        // Multiplying top and bottom by a common factor changes nothing.
        let r2 = RationalFunction::from_parts(s, n.mul(&k), m.mul(&k));
        prop_assert_eq!(r2, r);
    }

    #[test]
    fn laurent_embedding_round_trip(p in laurent(), p2 in laurent()) {
        let r = RationalFunction::from_laurent(&p);
        prop_assert_eq!(r.to_laurent(), Some(p.clone()));
        prop_assert!(r.int_den().is_one() || p.is_zero() || r.den().len() == 1);
        let sum = laurent_arith(&p, &p2, LaurentOp::Add);
        prop_assert_eq!(RationalFunction::from_laurent(&sum), &r + &RationalFunction::from_laurent(&p2));
        let prod = laurent_arith(&p, &p2, LaurentOp::Mul);
        prop_assert_eq!(RationalFunction::from_laurent(&prod), &r * &RationalFunction::from_laurent(&p2));
    }
}

#[test]
fn q_int_addition_identity() {
    for m in 0..=10u32 {
        for n in 0..=10u32 {
            let lhs = q_int(m + n);
            let rhs = &(&LaurentPoly::q_pow(n as i32) * &q_int(m)) + &(&LaurentPoly::q_pow(-(m as i32)) * &q_int(n));
            assert_eq!(lhs, rhs, "m={m} n={n}");
        }
    }
}

#[test]
fn q_int_values() {
    assert!(q_int(0).is_zero());
    assert_eq!(q_int(2), LaurentPoly::from_int_terms(&[(1, 1), (-1, 1)]));
    assert_eq!(q_int(3), LaurentPoly::from_int_terms(&[(2, 1), (0, 1), (-2, 1)]));
}

#[test]
fn rho_value_and_symmetry() {
    assert_eq!(rho(), LaurentPoly::from_int_terms(&[(4, -1), (0, 2), (-4, -1)]));
    let d = LaurentPoly::from_int_terms(&[(2, 1), (-2, -1)]);
    assert_eq!(rho(), -&(&d * &d));
    assert_eq!(rho().invert_q(), rho());
}

#[test]
fn laurent_examples() {
    let a = LaurentPoly::from_int_terms(&[(1, 1), (-1, 1)]);
    let b = LaurentPoly::from_int_terms(&[(1, 1), (-1, -1)]);
    assert_eq!(laurent_arith(&a, &b, LaurentOp::Mul), LaurentPoly::from_int_terms(&[(2, 1), (-2, -1)]));
    assert_eq!(laurent_arith(&a, &LaurentPoly::zero(), LaurentOp::Add), a);
    let c = LaurentPoly::from_int_terms(&[(2, 1), (-2, -1)]);
    assert_eq!(
        laurent_arith(&c, &c, LaurentOp::Mul),
        LaurentPoly::from_int_terms(&[(4, 1), (0, -2), (-4, 1)])
    );
}

#[test]
fn division_examples() {
    let num = RationalFunction::from_laurent(&LaurentPoly::from_int_terms(&[(2, 1), (-2, -1)]));
    let den = RationalFunction::from_laurent(&LaurentPoly::from_int_terms(&[(1, 1), (-1, 1)]));
    let want = RationalFunction::from_laurent(&LaurentPoly::from_int_terms(&[(1, 1), (-1, -1)]));
    assert_eq!(ratfunc_arith(&num, &den, RatOp::Div).unwrap(), want);
    assert!(ratfunc_arith(&den, &den, RatOp::Div).unwrap().is_one());
    assert_eq!(
        ratfunc_arith(&num, &RationalFunction::zero(), RatOp::Div),
        Err(RingError::DivisionByZero)
    );
    // 1/(q + q^-1) = q * 1/(q^2 + 1).
    let r = ratfunc_arith(&RationalFunction::one(), &den, RatOp::Div).unwrap();
    assert_eq!(r.shift(), 1);
    assert_eq!(r.num(), vec![BigRational::one()]);
    assert_eq!(r.den(), vec![BigRational::one(), BigRational::zero(), BigRational::one()]);
}
