use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{cmp_words, AlgebraError, Alphabet, DegreeScheme, Generator, Word};
use crate::ring::RationalFunction;

/// Finite linear combination of words with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NcPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Word, RationalFunction>,
}

/// Binary operation selector for [`poly_arith`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    /// Multiply the left operand by a scalar; the right operand is ignored.
    Scale(RationalFunction),
}

pub fn poly_arith(a: &NcPoly, b: &NcPoly, op: PolyOp) -> Result<NcPoly, AlgebraError> {
    match op {
        PolyOp::Add => a.try_add(b),
        PolyOp::Sub => a.try_sub(b),
        PolyOp::Mul => a.try_mul(b),
        PolyOp::Scale(c) => Ok(a.scale(&c)),
    }
}

/// `ab - ba`.
pub fn commutator(a: &NcPoly, b: &NcPoly) -> Result<NcPoly, AlgebraError> {
    a.try_mul(b)?.try_sub(&b.try_mul(a)?)
}

/// `q ab - q^-1 ba`.
pub fn q_commutator(a: &NcPoly, b: &NcPoly) -> Result<NcPoly, AlgebraError> {
    q_commutator_pow(a, b, 1)
}

/// `q^e ab - q^-e ba`; `e = -1` gives the bracket subscripted by `q^-1`.
pub fn q_commutator_pow(a: &NcPoly, b: &NcPoly, e: i32) -> Result<NcPoly, AlgebraError> {
    a.try_mul(b)?
        .scale(&RationalFunction::q_pow(e))
        .try_sub(&b.try_mul(a)?.scale(&RationalFunction::q_pow(-e)))
}

impl NcPoly {
    pub fn zero(alphabet: Alphabet) -> Self {
        NcPoly { alphabet, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Self::scalar(alphabet, RationalFunction::one())
    }

    pub fn scalar(alphabet: Alphabet, c: RationalFunction) -> Self {
        Self::monomial(alphabet, Word::empty(), c)
    }

    pub fn monomial(alphabet: Alphabet, w: Word, c: RationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NcPoly { alphabet, terms }
    }

    pub fn word(alphabet: Alphabet, w: Word) -> Self {
        Self::monomial(alphabet, w, RationalFunction::one())
    }

    /// A generator, validated against the alphabet.
    pub fn generator(alphabet: Alphabet, g: Generator) -> Result<Self, AlgebraError> {
        if !alphabet.contains(g) {
            return Err(AlgebraError::InvalidGenerator { alphabet, generator: g });
        }
        Ok(Self::word(alphabet, Word::single(g)))
    }

    /// Generator constructor for call sites where validity is known.
    pub fn gen(alphabet: Alphabet, g: Generator) -> Self {
        Self::generator(alphabet, g).expect("generator in alphabet")
    }

    pub fn from_terms<I>(alphabet: Alphabet, it: I) -> Self
    where
        I: IntoIterator<Item = (Word, RationalFunction)>,
    {
        let mut p = Self::zero(alphabet);
        for (w, c) in it {
            p.add_term(w, &c);
        }
        p
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<Word, RationalFunction> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, RationalFunction> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> RationalFunction {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The scalar value if the polynomial is supported on the empty word.
    pub fn as_scalar(&self) -> Option<RationalFunction> {
        match self.terms.len() {
            0 => Some(RationalFunction::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: &RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    fn check(&self, other: &NcPoly) -> Result<(), AlgebraError> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(AlgebraError::AlphabetMismatch { left: self.alphabet, right: other.alphabet })
        }
    }

    pub fn try_add(&self, other: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &c.neg());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.check(other)?;
        let mut out = NcPoly::zero(self.alphabet);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RationalFunction) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero(self.alphabet);
        }
        if c.is_one() {
            return self.clone();
        }
        NcPoly {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> NcPoly {
        let mut acc = NcPoly::one(self.alphabet);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Maximum word degree; the zero polynomial has degree 0.
    pub fn degree(&self, scheme: DegreeScheme) -> Result<u32, AlgebraError> {
        scheme.check(self.alphabet)?;
        Ok(self.terms.keys().map(|w| scheme.word_degree(w)).max().unwrap_or(0))
    }

    /// Same terms, reinterpreted in another alphabet containing all letters.
    pub fn relabel(&self, alphabet: Alphabet) -> Result<NcPoly, AlgebraError> {
        for w in self.terms.keys() {
            for &g in w.letters() {
                if !alphabet.contains(g) {
                    return Err(AlgebraError::InvalidGenerator { alphabet, generator: g });
                }
            }
        }
        Ok(NcPoly { alphabet, terms: self.terms.clone() })
    }

    /// Terms sorted descending in the canonical order of `scheme`.
    pub fn sorted_terms(&self, scheme: DegreeScheme) -> Vec<(&Word, &RationalFunction)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| cmp_words(b.0, a.0, scheme));
        v
    }

    /// Largest word in the canonical order of `scheme`.
    pub fn leading_word(&self, scheme: DegreeScheme) -> Option<&Word> {
        self.terms.keys().max_by(|a, b| cmp_words(a, b, scheme))
    }

    /// Every letter occurring in the polynomial.
    pub fn letters(&self) -> impl Iterator<Item = Generator> + '_ {
        self.terms.keys().flat_map(|w| w.letters().iter().copied())
    }
}

macro_rules! op_impl {
    ($tr:ident, $m:ident, $try:ident) => {
        /// Panics on alphabet mismatch; use the `try_` method for a checked variant.
        impl $tr for &NcPoly {
            type Output = NcPoly;
            fn $m(self, rhs: &NcPoly) -> NcPoly {
                self.$try(rhs).expect("alphabet mismatch")
            }
        }
        impl $tr for NcPoly {
            type Output = NcPoly;
            fn $m(self, rhs: NcPoly) -> NcPoly {
                self.$try(&rhs).expect("alphabet mismatch")
            }
        }
        impl $tr<&NcPoly> for NcPoly {
            type Output = NcPoly;
            fn $m(self, rhs: &NcPoly) -> NcPoly {
                self.$try(rhs).expect("alphabet mismatch")
            }
        }
    };
}
op_impl!(Add, add, try_add);
op_impl!(Sub, sub, try_sub);
op_impl!(Mul, mul, try_mul);

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }
}

impl Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        -&self
    }
}

impl Mul<&RationalFunction> for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &RationalFunction) -> NcPoly {
        self.scale(rhs)
    }
}

impl Mul<&RationalFunction> for NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &RationalFunction) -> NcPoly {
        self.scale(rhs)
    }
}

impl fmt::Display for NcPoly {
    /// Renders terms from the largest word down, in the CLI expression syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let scheme = self.alphabet.default_scheme();
        for (i, (w, c)) in self.sorted_terms(scheme).into_iter().enumerate() {
            let mono = c.as_monomial();
            let neg = mono.as_ref().is_some_and(|(r, _)| r.is_negative());
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let c = if neg { c.neg() } else { c.clone() };
            if w.is_empty() {
                if self.terms.len() == 1 {
                    write!(f, "{c}")?;
                } else {
                    c.fmt_factor(f)?;
                }
                continue;
            }
            if !c.is_one() {
                c.fmt_factor(f)?;
                f.write_str("*")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly[{}]({self})", self.alphabet)
    }
}
