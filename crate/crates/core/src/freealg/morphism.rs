use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::{AlgebraError, Alphabet, Generator, NcPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Automorphism,
    Antiautomorphism,
}

type Rule = dyn Fn(Generator) -> Option<NcPoly> + Send + Sync;

/// Generator-to-polynomial assignment extended (anti)multiplicatively.
///
/// Images are produced on demand, so infinite alphabets need no
/// materialized table.
#[derive(Clone)]
pub struct Morphism {
    pub name: String,
    pub flavor: Flavor,
    pub source: Alphabet,
    pub target: Alphabet,
    rule: Arc<Rule>,
}

impl Morphism {
    pub fn new<F>(name: &str, flavor: Flavor, source: Alphabet, target: Alphabet, rule: F) -> Self
    where
        F: Fn(Generator) -> Option<NcPoly> + Send + Sync + 'static,
    {
        Morphism { name: name.to_string(), flavor, source, target, rule: Arc::new(rule) }
    }

    pub fn image(&self, g: Generator) -> Result<NcPoly, AlgebraError> {
        if !self.source.contains(g) {
            return Err(AlgebraError::InvalidGenerator { alphabet: self.source, generator: g });
        }
        let img = (self.rule)(g).ok_or_else(|| AlgebraError::MissingImage {
            morphism: self.name.clone(),
            generator: g,
        })?;
        debug_assert_eq!(img.alphabet(), self.target);
        Ok(img)
    }

    pub fn apply(&self, x: &NcPoly) -> Result<NcPoly, AlgebraError> {
        apply_morphism(self, x)
    }

    /// Composite `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Morphism) -> Result<Morphism, AlgebraError> {
        if other.target != self.source {
            return Err(AlgebraError::WrongSource {
                morphism: self.name.clone(),
                expected: self.source,
                got: other.target,
            });
        }
        let flavor = if self.flavor == other.flavor {
            Flavor::Automorphism
        } else {
            Flavor::Antiautomorphism
        };
        let (a, b) = (self.clone(), other.clone());
        Ok(Morphism::new(
            &format!("{}∘{}", self.name, other.name),
            flavor,
            other.source,
            self.target,
            move |g| b.image(g).ok().and_then(|x| a.apply(&x).ok()),
        ))
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({}: {} -> {}, {:?})", self.name, self.source, self.target, self.flavor)
    }
}

/// Linear extension of the generator images; antiautomorphisms reverse
/// each word before substituting.
pub fn apply_morphism(m: &Morphism, x: &NcPoly) -> Result<NcPoly, AlgebraError> {
    if x.alphabet() != m.source {
        return Err(AlgebraError::WrongSource {
            morphism: m.name.clone(),
            expected: m.source,
            got: x.alphabet(),
        });
    }
    let mut cache: HashMap<Generator, NcPoly> = HashMap::new();
    let mut out = NcPoly::zero(m.target);
    for (w, c) in x.terms() {
        let mut acc = NcPoly::scalar(m.target, c.clone());
        let letters: Vec<Generator> = match m.flavor {
            Flavor::Automorphism => w.letters().to_vec(),
            Flavor::Antiautomorphism => w.letters().iter().rev().copied().collect(),
        };
        for g in letters {
            if !cache.contains_key(&g) {
                cache.insert(g, m.image(g)?);
            }
            acc = acc.try_mul(&cache[&g])?;
        }
        out = out.try_add(&acc)?;
    }
    Ok(out)
}
