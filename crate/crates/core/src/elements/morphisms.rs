use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::freealg::{Alphabet, Family, Flavor, Generator, Morphism, NcPoly};

/// The named symmetries and comparison maps between the alphabets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedMorphism {
    /// Automorphism of the alternating algebra: `W[-k] <-> W[k+1]`, `G <-> Gt`.
    SigmaAlt,
    /// Antiautomorphism of the alternating algebra fixing every `W`, `G <-> Gt`.
    DaggerAlt,
    /// `SigmaAlt` composed with `DaggerAlt`: swaps the `W`s, fixes both G-families.
    TauAlt,
    /// Automorphism `W0 <-> W1` of the two-generator algebra.
    SigmaOq,
    /// Antiautomorphism fixing `W0`, `W1`.
    DaggerOq,
    /// Antiautomorphism `W0 <-> W1`.
    TauOq,
    /// Two-generator algebra into the alternating algebra.
    Iota,
    /// Essential generators to their namesakes in the alternating algebra.
    Natural,
    /// Two-generator algebra into the essential algebra.
    Flat,
    /// `z[n] -> Gt[n]`, polynomial ring into the essential algebra.
    Sharp,
    /// Essential algebra onto its mirror: `W0 <-> W1`, `Gt[k] -> G[k]`.
    SigmaEss,
    /// Mirrored essential generators to their namesakes in the alternating algebra.
    NaturalSigma,
}

impl NamedMorphism {
    pub const ALL: [NamedMorphism; 12] = [
        NamedMorphism::SigmaAlt,
        NamedMorphism::DaggerAlt,
        NamedMorphism::TauAlt,
        NamedMorphism::SigmaOq,
        NamedMorphism::DaggerOq,
        NamedMorphism::TauOq,
        NamedMorphism::Iota,
        NamedMorphism::Natural,
        NamedMorphism::Flat,
        NamedMorphism::Sharp,
        NamedMorphism::SigmaEss,
        NamedMorphism::NaturalSigma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedMorphism::SigmaAlt => "sigma",
            NamedMorphism::DaggerAlt => "dagger",
            NamedMorphism::TauAlt => "tau",
            NamedMorphism::SigmaOq => "sigma_oq",
            NamedMorphism::DaggerOq => "dagger_oq",
            NamedMorphism::TauOq => "tau_oq",
            NamedMorphism::Iota => "iota",
            NamedMorphism::Natural => "natural",
            NamedMorphism::Flat => "flat",
            NamedMorphism::Sharp => "sharp",
            NamedMorphism::SigmaEss => "sigma_ess",
            NamedMorphism::NaturalSigma => "natural_sigma",
        }
    }

    pub fn source(self) -> Alphabet {
        match self {
            NamedMorphism::SigmaAlt | NamedMorphism::DaggerAlt | NamedMorphism::TauAlt => Alphabet::Alt,
            NamedMorphism::SigmaOq | NamedMorphism::DaggerOq | NamedMorphism::TauOq => Alphabet::Oq,
            NamedMorphism::Iota | NamedMorphism::Flat => Alphabet::Oq,
            NamedMorphism::Natural | NamedMorphism::SigmaEss => Alphabet::Ess,
            NamedMorphism::Sharp => Alphabet::Z,
            NamedMorphism::NaturalSigma => Alphabet::EssSigma,
        }
    }

    pub fn target(self) -> Alphabet {
        match self {
            NamedMorphism::SigmaAlt
            | NamedMorphism::DaggerAlt
            | NamedMorphism::TauAlt
            | NamedMorphism::Iota
            | NamedMorphism::Natural
            | NamedMorphism::NaturalSigma => Alphabet::Alt,
            NamedMorphism::SigmaOq | NamedMorphism::DaggerOq | NamedMorphism::TauOq => Alphabet::Oq,
            NamedMorphism::Flat | NamedMorphism::Sharp => Alphabet::Ess,
            NamedMorphism::SigmaEss => Alphabet::EssSigma,
        }
    }

    pub fn flavor(self) -> Flavor {
        match self {
            NamedMorphism::DaggerAlt
            | NamedMorphism::TauAlt
            | NamedMorphism::DaggerOq
            | NamedMorphism::TauOq => Flavor::Antiautomorphism,
            _ => Flavor::Automorphism,
        }
    }

    /// Image of a single generator, or `None` if `g` is not in the source.
    pub fn image_of(self, g: Generator) -> Option<Generator> {
        if !self.source().contains(g) {
            return None;
        }
        let swap_w = |g: Generator| match g.family {
            Family::Wminus => Generator { family: Family::Wplus, index: g.index },
            Family::Wplus => Generator { family: Family::Wminus, index: g.index },
            _ => g,
        };
        let swap_g = |g: Generator| match g.family {
            Family::Gcal => Generator::gt(g.index),
            Family::Gtil => Generator::g(g.index),
            _ => g,
        };
        Some(match self {
            NamedMorphism::SigmaAlt => swap_g(swap_w(g)),
            NamedMorphism::DaggerAlt => swap_g(g),
            NamedMorphism::TauAlt | NamedMorphism::SigmaOq | NamedMorphism::TauOq => swap_w(g),
            NamedMorphism::DaggerOq
            | NamedMorphism::Iota
            | NamedMorphism::Natural
            | NamedMorphism::Flat
            | NamedMorphism::NaturalSigma => g,
            NamedMorphism::Sharp => Generator::gt(g.index),
            NamedMorphism::SigmaEss => swap_g(swap_w(g)),
        })
    }

    pub fn morphism(self) -> Morphism {
        let target = self.target();
        Morphism::new(self.name(), self.flavor(), self.source(), target, move |g| {
            self.image_of(g).map(|h| NcPoly::gen(target, h))
        })
    }

    pub fn apply(self, x: &NcPoly) -> Result<NcPoly, crate::freealg::AlgebraError> {
        self.morphism().apply(x)
    }
}

impl fmt::Display for NamedMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedMorphism {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let norm = s.trim().to_ascii_lowercase();
        NamedMorphism::ALL
            .into_iter()
            .find(|m| m.name() == norm)
            .ok_or_else(|| format!("unknown morphism '{s}'"))
    }
}
