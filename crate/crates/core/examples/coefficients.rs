//! Arithmetic in Q(q): q-integers, the structure constants, division.

use qonsager::ring::{consts, q_int, ratfunc_arith, LaurentPoly, RatOp, RationalFunction};

fn main() {
    for n in 0..=5 {
        println!("[{n}]_q = {}", q_int(n));
    }
    println!("rho        = {}", consts::rho());
    println!("(q^2-q^-2)^2 = {}", consts::qdg());
    println!("gg0        = {}", consts::gg0());

    let two = RationalFunction::from_laurent(&q_int(2));
    let three = RationalFunction::from_laurent(&q_int(3));
    let r = ratfunc_arith(&three, &two, RatOp::Div).unwrap();
    println!("[3]/[2]    = {r}");
    println!("  * [2]    = {}", &r * &two);
    let back = (&r * &two).to_laurent().unwrap();
    assert_eq!(back, q_int(3));

    let x = RationalFunction::from_laurent(&LaurentPoly::from_int_terms(&[(2, 1), (-2, -1)]));
    let y = RationalFunction::from_laurent(&LaurentPoly::from_int_terms(&[(1, 1), (-1, -1)]));
    println!("(q^2-q^-2)/(q-q^-1) = {}", ratfunc_arith(&x, &y, RatOp::Div).unwrap());
    println!("1/(q-q^-1)          = {}", y.recip().unwrap());
}
