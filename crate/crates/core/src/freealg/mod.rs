//! Free algebras over `Q(q)` on the generator alphabets used throughout the
//! crate, with degree schemes, commutators and (anti)morphisms.

mod degree;
mod morphism;
mod poly;

pub use degree::{cmp_words, enumerate_words, enumerate_words_by_degree, DegreeScheme};
pub use morphism::{apply_morphism, Flavor, Morphism};
pub use poly::{commutator, poly_arith, q_commutator, q_commutator_pow, NcPoly, PolyOp};

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

/// Which generating set a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Alphabet {
    /// All alternating generators `W[-k]`, `W[k+1]`, `G[k+1]`, `Gt[k+1]`.
    Alt,
    /// Essential generators `W[0]`, `W[1]`, `Gt[k+1]`.
    Ess,
    /// Mirror of [`Alphabet::Ess`] with `G[k+1]` in place of `Gt[k+1]`.
    EssSigma,
    /// Two generators `W[0]`, `W[1]`.
    Oq,
    /// Commuting indeterminates `z[n]`, `n >= 1`.
    Z,
}

impl Alphabet {
    pub fn name(self) -> &'static str {
        match self {
            Alphabet::Alt => "ALT",
            Alphabet::Ess => "ESS",
            Alphabet::EssSigma => "ESS_SIGMA",
            Alphabet::Oq => "OQ",
            Alphabet::Z => "Z",
        }
    }

    /// The scheme used for display ordering and default degree bookkeeping.
    pub fn default_scheme(self) -> DegreeScheme {
        match self {
            Alphabet::Alt => DegreeScheme::AltDeg,
            Alphabet::Ess | Alphabet::EssSigma => DegreeScheme::EssDeg,
            Alphabet::Oq => DegreeScheme::LenDeg,
            Alphabet::Z => DegreeScheme::ZDeg,
        }
    }

    pub fn contains(self, g: Generator) -> bool {
        use Family::*;
        let i = g.index;
        match (self, g.family) {
            (Alphabet::Alt, Gcal | Gtil) => i >= 1,
            (Alphabet::Alt, Wminus | Wplus) => true,
            (Alphabet::Ess, Gtil) | (Alphabet::EssSigma, Gcal) => i >= 1,
            (Alphabet::Ess | Alphabet::EssSigma | Alphabet::Oq, Wminus | Wplus) => i == 0,
            (Alphabet::Z, Z) => i >= 1,
            _ => false,
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Generator families in their fixed comparison order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `G[k]`, `k >= 1`.
    Gcal,
    /// `W[-k]`, `k >= 0`.
    Wminus,
    /// `W[k+1]`, `k >= 0`.
    Wplus,
    /// `Gt[k]`, `k >= 1`.
    Gtil,
    /// `z[n]`, `n >= 1`.
    Z,
}

/// A single letter. The derived order (family, then index) is the
/// lexicographic tie-break of the canonical monomial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub family: Family,
    pub index: u32,
}

impl Generator {
    pub const W0: Generator = Generator { family: Family::Wminus, index: 0 };
    pub const W1: Generator = Generator { family: Family::Wplus, index: 0 };

    pub fn new(alphabet: Alphabet, family: Family, index: u32) -> Result<Self, AlgebraError> {
        let g = Generator { family, index };
        if alphabet.contains(g) {
            Ok(g)
        } else {
            Err(AlgebraError::InvalidGenerator { alphabet, generator: g })
        }
    }

    /// `W[n]` for any integer `n`.
    pub fn w(n: i64) -> Self {
        if n <= 0 {
            Generator { family: Family::Wminus, index: (-n) as u32 }
        } else {
            Generator { family: Family::Wplus, index: (n - 1) as u32 }
        }
    }

    pub fn g(k: u32) -> Self {
        Generator { family: Family::Gcal, index: k }
    }

    pub fn gt(k: u32) -> Self {
        Generator { family: Family::Gtil, index: k }
    }

    pub fn z(n: u32) -> Self {
        Generator { family: Family::Z, index: n }
    }

    /// Integer subscript `n` of `W[n]`, if this is a W-letter.
    pub fn w_subscript(self) -> Option<i64> {
        match self.family {
            Family::Wminus => Some(-(self.index as i64)),
            Family::Wplus => Some(self.index as i64 + 1),
            _ => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Gcal => write!(f, "G[{}]", self.index),
            Family::Gtil => write!(f, "Gt[{}]", self.index),
            Family::Wminus | Family::Wplus => write!(f, "W[{}]", self.w_subscript().unwrap()),
            Family::Z => write!(f, "z[{}]", self.index),
        }
    }
}

/// A finite product of generators; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub SmallVec<[Generator; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn single(g: Generator) -> Self {
        Word(smallvec::smallvec![g])
    }

    pub fn from_slice(gs: &[Generator]) -> Self {
        Word(SmallVec::from_slice(gs))
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: Alphabet, right: Alphabet },
    #[error("generator {generator} is not in alphabet {alphabet}")]
    InvalidGenerator { alphabet: Alphabet, generator: Generator },
    #[error("degree scheme {scheme:?} does not apply to alphabet {alphabet}")]
    SchemeNotApplicable { scheme: DegreeScheme, alphabet: Alphabet },
    #[error("alphabet {alphabet} has infinitely many generators of degree <= {bound} under {scheme:?}")]
    InfiniteLevel { alphabet: Alphabet, scheme: DegreeScheme, bound: u32 },
    #[error("morphism {morphism} has no image for generator {generator}")]
    MissingImage { morphism: String, generator: Generator },
    #[error("morphism {morphism} expects source alphabet {expected}, got {got}")]
    WrongSource { morphism: String, expected: Alphabet, got: Alphabet },
}
