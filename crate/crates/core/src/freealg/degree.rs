use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{AlgebraError, Alphabet, Family, Generator, Word};

/// Assignment of a positive degree to each generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DegreeScheme {
    /// `W[-k]`, `W[k+1]` have degree `2k+1`; `G[k]`, `Gt[k]` have degree `2k`.
    AltDeg,
    /// `W[0]`, `W[1]` have degree 1; `Gt[k]` (and `G[k]` in the mirrored
    /// alphabet) have degree `2k`.
    EssDeg,
    /// Word length.
    LenDeg,
    /// `z[n]` has degree `n`.
    ZDeg,
}

impl DegreeScheme {
    pub fn applies_to(self, a: Alphabet) -> bool {
        match self {
            DegreeScheme::AltDeg => a != Alphabet::Z,
            DegreeScheme::EssDeg => matches!(a, Alphabet::Ess | Alphabet::EssSigma | Alphabet::Oq),
            DegreeScheme::LenDeg => true,
            DegreeScheme::ZDeg => a == Alphabet::Z,
        }
    }

    pub fn check(self, a: Alphabet) -> Result<(), AlgebraError> {
        if self.applies_to(a) {
            Ok(())
        } else {
            Err(AlgebraError::SchemeNotApplicable { scheme: self, alphabet: a })
        }
    }

    /// Degree of one generator (the caller has checked applicability).
    pub fn gen_degree(self, g: Generator) -> u32 {
        match self {
            DegreeScheme::LenDeg => 1,
            DegreeScheme::ZDeg => g.index,
            DegreeScheme::AltDeg | DegreeScheme::EssDeg => match g.family {
                Family::Wminus | Family::Wplus => 2 * g.index + 1,
                Family::Gcal | Family::Gtil => 2 * g.index,
                Family::Z => g.index,
            },
        }
    }

    pub fn word_degree(self, w: &Word) -> u32 {
        w.letters().iter().map(|&g| self.gen_degree(g)).sum()
    }

    /// All generators of `a` with degree at most `bound`, in code order.
    pub fn generators_up_to(self, a: Alphabet, bound: u32) -> Result<Vec<Generator>, AlgebraError> {
        self.check(a)?;
        let infinite = matches!(
            (self, a),
            (DegreeScheme::LenDeg, Alphabet::Alt | Alphabet::Ess | Alphabet::EssSigma | Alphabet::Z)
        );
        if infinite && bound >= 1 {
            return Err(AlgebraError::InfiniteLevel { alphabet: a, scheme: self, bound });
        }
        let mut out = Vec::new();
        for family in [Family::Gcal, Family::Wminus, Family::Wplus, Family::Gtil, Family::Z] {
            for index in 0..=bound {
                let g = Generator { family, index };
                if a.contains(g) && self.gen_degree(g) <= bound && self.gen_degree(g) > 0 {
                    out.push(g);
                }
            }
        }
        Ok(out)
    }
}

/// Canonical monomial order: degree, then length, then lexicographic on
/// generator codes.
pub fn cmp_words(a: &Word, b: &Word, scheme: DegreeScheme) -> Ordering {
    scheme
        .word_degree(a)
        .cmp(&scheme.word_degree(b))
        .then(a.len().cmp(&b.len()))
        .then_with(|| a.letters().cmp(b.letters()))
}

/// Words grouped by exact degree `0..=bound`, each group in canonical order.
pub fn enumerate_words_by_degree(
    alphabet: Alphabet,
    scheme: DegreeScheme,
    bound: u32,
) -> Result<Vec<Vec<Word>>, AlgebraError> {
    let gens = scheme.generators_up_to(alphabet, bound)?;
    let mut levels: Vec<Vec<Word>> = vec![vec![Word::empty()]];
    for d in 1..=bound {
        let mut level = Vec::new();
        for &g in &gens {
            let gd = scheme.gen_degree(g);
            if gd > d {
                continue;
            }
            for tail in &levels[(d - gd) as usize] {
                let mut w = Word::single(g);
                w.0.extend_from_slice(tail.letters());
                level.push(w);
            }
        }
        level.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.letters().cmp(b.letters())));
        levels.push(level);
    }
    Ok(levels)
}

/// All words of degree at most `bound` in canonical order.
pub fn enumerate_words(
    alphabet: Alphabet,
    scheme: DegreeScheme,
    bound: u32,
) -> Result<Vec<Word>, AlgebraError> {
    Ok(enumerate_words_by_degree(alphabet, scheme, bound)?
        .into_iter()
        .flatten()
        .collect())
}
