//! Exact coefficient arithmetic: integer polynomials, Laurent polynomials
//! and the rational function field `Q(q)`.

mod intpoly;
mod laurent;
mod ratfunc;

pub use intpoly::IntPoly;
pub use laurent::LaurentPoly;
pub use ratfunc::RationalFunction;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
}

/// Binary operation selector for [`laurent_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaurentOp {
    Add,
    Sub,
    Mul,
}

/// Binary operation selector for [`ratfunc_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn laurent_arith(a: &LaurentPoly, b: &LaurentPoly, op: LaurentOp) -> LaurentPoly {
    match op {
        LaurentOp::Add => a + b,
        LaurentOp::Sub => a - b,
        LaurentOp::Mul => a * b,
    }
}

pub fn ratfunc_arith(
    a: &RationalFunction,
    b: &RationalFunction,
    op: RatOp,
) -> Result<RationalFunction, RingError> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => a.checked_div(b)?,
    })
}

/// Balanced q-integer `[n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)`.
pub fn q_int(n: u32) -> LaurentPoly {
    let n = n as i32;
    LaurentPoly::from_int_terms(&(0..n).map(|i| (n - 1 - 2 * i, 1)).collect::<Vec<_>>())
}

/// `rho = -(q^2 - q^-2)^2`.
pub fn rho() -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(4, -1), (0, 2), (-4, -1)])
}

/// `(q^2 - q^-2)^2`, the constant appearing in the q-Dolan/Grady relations.
pub fn qdg_const() -> LaurentPoly {
    -rho()
}

/// `q - q^-1`.
pub fn q_minus_qinv() -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(1, 1), (-1, -1)])
}

/// The scalar standing for the index-0 members of both G-families:
/// `-(q - q^-1) [2]_q^2`.
pub fn gg0() -> LaurentPoly {
    let two = q_int(2);
    -(&q_minus_qinv() * &(&two * &two))
}

/// Shorthand constants in [`RationalFunction`] form.
pub mod consts {
    use super::*;

    pub fn q(e: i32) -> RationalFunction {
        RationalFunction::q_pow(e)
    }

    pub fn int(c: i64) -> RationalFunction {
        RationalFunction::from_int(c)
    }

    pub fn qint(n: u32) -> RationalFunction {
        RationalFunction::from_laurent(&q_int(n))
    }

    pub fn rho() -> RationalFunction {
        RationalFunction::from_laurent(&super::rho())
    }

    pub fn qdg() -> RationalFunction {
        RationalFunction::from_laurent(&super::qdg_const())
    }

    pub fn gg0() -> RationalFunction {
        RationalFunction::from_laurent(&super::gg0())
    }

    pub fn q_minus_qinv() -> RationalFunction {
        RationalFunction::from_laurent(&super::q_minus_qinv())
    }

    /// `(q - q^-1)(q^2 - q^-2)`.
    pub fn b_const() -> RationalFunction {
        &q_minus_qinv() * &RationalFunction::from_laurent(&LaurentPoly::from_int_terms(&[(2, 1), (-2, -1)]))
    }

    pub fn inv(x: &RationalFunction) -> RationalFunction {
        x.recip().expect("nonzero constant")
    }
}
