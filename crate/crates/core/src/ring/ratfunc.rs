//! Canonical elements of the rational function field `Q(q)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::intpoly::IntPoly;
use super::laurent::{fmt_terms, LaurentPoly};
use super::RingError;

/// An element `q^shift * n(q) / m(q)` of `Q(q)`.
///
/// Internally `n` and `m` are integer polynomials with nonzero constant
/// terms, `m` has a positive leading coefficient and `n`, `m` share no
/// common factor in `Z[q]` (integers included). That fraction is unique,
/// so equality and hashing are structural. The rational `num`/`den` view
/// with a monic denominator is produced by [`RationalFunction::num`] and
/// [`RationalFunction::den`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    shift: i32,
    n: IntPoly,
    m: IntPoly,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            shift: 0,
            n: IntPoly::zero(),
            m: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        RationalFunction {
            shift: 0,
            n: IntPoly::constant(c),
            m: IntPoly::one(),
        }
    }

    pub fn from_rational(c: &BigRational) -> Self {
        Self::from_parts(
            0,
            IntPoly::constant(c.numer().clone()),
            IntPoly::constant(c.denom().clone()),
        )
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        RationalFunction {
            shift: e,
            n: IntPoly::one(),
            m: IntPoly::one(),
        }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// Integer Laurent polynomial `q^shift * n(q)`.
    pub fn from_int_laurent(shift: i32, n: IntPoly) -> Self {
        Self::from_parts(shift, n, IntPoly::one())
    }

    /// Canonicalize an arbitrary fraction `q^shift * n / m` with `m != 0`.
    pub fn from_parts(shift: i32, n: IntPoly, m: IntPoly) -> Self {
        assert!(!m.is_zero(), "zero denominator");
        if n.is_zero() {
            return Self::zero();
        }
        let vn = n.valuation();
        let vm = m.valuation();
        let shift = shift + vn as i32 - vm as i32;
        let mut n = n.shift_down(vn);
        let mut m = m.shift_down(vm);
        let g = n.gcd(&m);
        if !g.is_one() {
            n = n.div_exact(&g).expect("gcd divides numerator");
            m = m.div_exact(&g).expect("gcd divides denominator");
        }
        if m.lc().is_negative() {
            n = n.neg();
            m = m.neg();
        }
        RationalFunction { shift, n, m }
    }

    /// Re-run canonicalization on an already canonical value.
    pub fn canonicalize(&self) -> Self {
        Self::from_parts(self.shift, self.n.clone(), self.m.clone())
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let Some(lo) = p.min_exp() else {
            return Self::zero();
        };
        let hi = p.max_exp().unwrap();
        let mut l = BigInt::one();
        for c in p.terms().values() {
            l = l.lcm(c.denom());
        }
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in p.terms() {
            coeffs[(e - lo) as usize] = c.numer() * (&l / c.denom());
        }
        Self::from_parts(lo, IntPoly::from_coeffs(coeffs), IntPoly::constant(l))
    }

    /// Laurent polynomial view, available when the denominator is constant.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if !self.m.is_constant() {
            return None;
        }
        let d = self.m.lc();
        Some(LaurentPoly::from_terms(self.n.coeffs().iter().enumerate().map(
            |(i, c)| (self.shift + i as i32, BigRational::new(c.clone(), d.clone())),
        )))
    }

    pub fn is_zero(&self) -> bool {
        self.n.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.n.is_one() && self.m.is_one()
    }

    /// True when the value lies in `Z[q, q^-1]`.
    pub fn is_int_laurent(&self) -> bool {
        self.m.is_one()
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    /// Integer numerator polynomial (before dividing by `lc(den)`).
    pub fn int_num(&self) -> &IntPoly {
        &self.n
    }

    /// Integer denominator polynomial with positive leading coefficient.
    pub fn int_den(&self) -> &IntPoly {
        &self.m
    }

    /// Numerator coefficients over `Q`, normalized so that [`Self::den`] is monic.
    pub fn num(&self) -> Vec<BigRational> {
        let l = self.m.lc();
        self.n
            .coeffs()
            .iter()
            .map(|c| BigRational::new(c.clone(), l.clone()))
            .collect()
    }

    /// Monic denominator coefficients over `Q`.
    pub fn den(&self) -> Vec<BigRational> {
        let l = self.m.lc();
        self.m
            .coeffs()
            .iter()
            .map(|c| BigRational::new(c.clone(), l.clone()))
            .collect()
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            shift: self.shift,
            n: self.n.neg(),
            m: self.m.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let (n, m) = if self.n.lc().is_negative() {
            (self.m.neg(), self.n.neg())
        } else {
            (self.m.clone(), self.n.clone())
        };
        Ok(RationalFunction {
            shift: -self.shift,
            n,
            m,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, RingError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self, RingError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Image under the substitution `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.n.degree().unwrap() as i32;
        let dm = self.m.degree().unwrap() as i32;
        Self::from_parts(-self.shift - dn + dm, self.n.reversed(), self.m.reversed())
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(rhs.shift);
        let a = self.n.shift_up((self.shift - s) as usize);
        let b = rhs.n.shift_up((rhs.shift - s) as usize);
        if self.m == rhs.m {
            let t = a.add(&b);
            if self.m.is_one() {
                return Self::strip(s, t, IntPoly::one());
            }
            return Self::from_parts(s, t, self.m.clone());
        }
        let d1 = self.m.gcd(&rhs.m);
        if d1.is_one() {
            let t = a.mul(&rhs.m).add(&b.mul(&self.m));
            return Self::strip(s, t, self.m.mul(&rhs.m));
        }
        let ma = self.m.div_exact(&d1).unwrap();
        let mb = rhs.m.div_exact(&d1).unwrap();
        let t = a.mul(&mb).add(&b.mul(&ma));
        if t.is_zero() {
            return Self::zero();
        }
        let d2 = t.gcd(&d1);
        let t = t.div_exact(&d2).unwrap();
        let den = ma.mul(&rhs.m.div_exact(&d2).unwrap());
        Self::strip(s, t, den)
    }

    /// Canonical value from a numerator already coprime to the denominator.
    fn strip(shift: i32, n: IntPoly, m: IntPoly) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        let v = n.valuation();
        RationalFunction {
            shift: shift + v as i32,
            n: n.shift_down(v),
            m,
        }
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let shift = self.shift + rhs.shift;
        if self.m.is_one() && rhs.m.is_one() {
            return RationalFunction {
                shift,
                n: self.n.mul(&rhs.n),
                m: IntPoly::one(),
            };
        }
        let g1 = self.n.gcd(&rhs.m);
        let g2 = rhs.n.gcd(&self.m);
        let (n1, m2) = if g1.is_one() {
            (self.n.clone(), rhs.m.clone())
        } else {
            (self.n.div_exact(&g1).unwrap(), rhs.m.div_exact(&g1).unwrap())
        };
        let (n2, m1) = if g2.is_one() {
            (rhs.n.clone(), self.m.clone())
        } else {
            (rhs.n.div_exact(&g2).unwrap(), self.m.div_exact(&g2).unwrap())
        };
        let mut n = n1.mul(&n2);
        let mut m = m1.mul(&m2);
        if m.lc().is_negative() {
            n = n.neg();
            m = m.neg();
        }
        RationalFunction { shift, n, m }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_impl(rhs)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_impl(&rhs.neg())
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.mul_impl(rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction::neg(self)
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction::neg(&self)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&RationalFunction> for RationalFunction {
    fn add_assign(&mut self, rhs: &RationalFunction) {
        *self = self.add_impl(rhs);
    }
}

impl SubAssign<&RationalFunction> for RationalFunction {
    fn sub_assign(&mut self, rhs: &RationalFunction) {
        *self = self.add_impl(&rhs.neg());
    }
}

impl From<&LaurentPoly> for RationalFunction {
    fn from(p: &LaurentPoly) -> Self {
        RationalFunction::from_laurent(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        RationalFunction::from_int(c)
    }
}

fn fmt_int_laurent(f: &mut impl fmt::Write, shift: i32, p: &IntPoly) -> fmt::Result {
    let cs: Vec<(i32, BigRational)> = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (shift + i as i32, BigRational::from_integer(c.clone())))
        .collect();
    fmt_terms(f, cs.iter().map(|(e, c)| (*e, c)))
}

impl RationalFunction {
    /// Number of printed summands in the numerator.
    pub fn num_terms(&self) -> usize {
        self.n.coeffs().iter().filter(|c| !c.is_zero()).count()
    }

    /// Single-term value `c * q^e` with `c` rational.
    pub fn as_monomial(&self) -> Option<(BigRational, i32)> {
        if self.num_terms() == 1 && self.m.is_constant() {
            let c = BigRational::new(self.n.lc(), self.m.lc());
            Some((c, self.shift + self.n.degree().unwrap() as i32))
        } else {
            None
        }
    }

    /// Render as a factor of a product: bare when a single term, else parenthesized.
    pub fn fmt_factor(&self, f: &mut impl fmt::Write) -> fmt::Result {
        if self.as_monomial().is_some() {
            write!(f, "{self}")
        } else {
            write!(f, "({self})")
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_constant() {
            return write!(f, "{}", self.to_laurent().unwrap());
        }
        write!(f, "(")?;
        fmt_int_laurent(f, self.shift, &self.n)?;
        write!(f, ")/(")?;
        fmt_int_laurent(f, 0, &self.m)?;
        write!(f, ")")
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
