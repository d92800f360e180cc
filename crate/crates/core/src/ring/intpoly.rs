//! Dense univariate polynomials with big-integer coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Polynomial in `q` over the integers, stored densely by ascending exponent.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Exponent of the lowest nonzero term (0 for the zero polynomial).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Divide by `q^k`; the caller guarantees `k <= valuation`.
    pub fn shift_down(&self, k: usize) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        debug_assert!(k <= self.valuation());
        IntPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.len().max(other.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigInt::zero());
        for (a, b) in coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.len() == 1 {
            return self.scale(&other.coeffs[0]);
        }
        if self.len() == 1 {
            return other.scale(&self.coeffs[0]);
        }
        let mut coeffs = vec![BigInt::zero(); self.len() + other.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divide every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    debug_assert!((a % c).is_zero());
                    a / c
                })
                .collect(),
        }
    }

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Flip sign so that the leading coefficient is positive.
    pub fn normalize_sign(self) -> Self {
        if self.lc().is_negative() {
            self.neg()
        } else {
            self
        }
    }

    /// Exact quotient `self / d` in `Z[q]`, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.len() == 1 {
            let c = &d.coeffs[0];
            if self.coeffs.iter().all(|a| (a % c).is_zero()) {
                return Some(self.div_scalar_exact(c));
            }
            return None;
        }
        if self.len() < d.len() {
            return None;
        }
        let dl = d.lc();
        let dn = d.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.len() - dn];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dn];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(&dl);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &qc * dc;
            }
            quot[i] = qc;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder of `self` by `d` (multiplies by powers of `lc(d)`).
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero());
        let dn = d.len() - 1;
        if self.len() <= dn {
            return self.clone();
        }
        let dl = d.lc();
        let mut rem = self.coeffs.clone();
        for top in (dn..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let t = rem[top].clone();
            // rem = a * rem - b * q^(top - dn) * d, with a/b = dl/t reduced
            let g = t.gcd(&dl);
            let a = &dl / &g;
            let b = &t / &g;
            if !a.is_one() {
                for c in rem[..top].iter_mut() {
                    *c *= &a;
                }
            }
            let off = top - dn;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[off + j] -= &b * dc;
            }
            rem[top] = BigInt::zero();
        }
        Self::from_coeffs(rem)
    }

    /// Greatest common divisor in `Z[q]`, normalized to a positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone().normalize_sign();
        }
        if other.is_zero() {
            return self.clone().normalize_sign();
        }
        let c = self.content().gcd(&other.content());
        if self.len() == 1 || other.len() == 1 {
            return Self::constant(c);
        }
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a == b {
            return a.scale(&c);
        }
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        // Common factors of q cannot be detected by the constant-term shortcut.
        let v = a.valuation().min(b.valuation());
        if v > 0 {
            a = a.shift_down(v);
            b = b.shift_down(v);
        }
        let g = loop {
            if b.len() == 1 {
                break Self::one();
            }
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                break b;
            }
            a = b;
            b = r.primitive_part();
        };
        g.shift_up(v).scale(&c)
    }

    /// Reverse the coefficient order: `q^deg * p(1/q)` when the constant
    /// term is nonzero.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_coeffs(coeffs)
    }

    /// Total order used only for deterministic tie-breaking.
    pub fn cmp_structural(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly{:?}", self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}
