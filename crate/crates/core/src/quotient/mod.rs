//! Degree-truncated quotients of free algebras by a presentation's relations.
//!
//! A quotient at bound `D` with headroom `H` is the span of all padded
//! relation products `w r w'` of degree at most `D + H`, brought to reduced
//! echelon form with respect to the canonical monomial order (largest word
//! first). Rows whose pivot has degree at most `D` give the ideal component
//! used for normal forms and dimensions.

mod cache;
mod kernel;

pub use cache::QuotientCache;

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::freealg::{enumerate_words_by_degree, AlgebraError, Alphabet, DegreeScheme, Family, NcPoly, Word};
use crate::presentations::{instantiate, PresentationId};
use crate::ring::RationalFunction;
use kernel::{clear_denominators, Echelon, WorkRow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("resource limit exceeded: {what} ({progress})")]
    ResourceLimit { what: String, progress: BuildStats },
    #[error("element has degree {degree}, above the quotient bound {bound}")]
    DegreeOverflow { degree: u32, bound: u32 },
    #[error("element is over alphabet {got}, quotient expects {expected}")]
    WrongAlphabet { expected: Alphabet, got: Alphabet },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Caps that turn runaway builds into errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_words: usize,
    pub max_rows: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_words: 1_500_000, max_rows: 6_000_000 }
    }
}

/// Progress and timing counters of a build.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BuildStats {
    pub words: usize,
    pub relations: usize,
    pub rows_generated: usize,
    pub pivots: usize,
    pub retained_pivots: usize,
    pub blocks: usize,
    pub reductions: u64,
    pub generation_millis: u64,
    pub elimination_millis: u64,
    pub interreduction_millis: u64,
}

impl std::fmt::Display for BuildStats {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "words={} relations={} rows={} pivots={} reductions={}",
            self.words, self.relations, self.rows_generated, self.pivots, self.reductions
        )
    }
}

/// A reduced echelon row: `pivot + sum(tail)`, pivot coefficient 1.
#[derive(Debug, Clone)]
pub struct ReducedRow {
    pub pivot: u32,
    pub tail: Vec<(u32, RationalFunction)>,
}

/// Bounded-degree component of a finitely presented algebra.
#[derive(Debug, Clone)]
pub struct TruncatedQuotient {
    presentation: PresentationId,
    bound: u32,
    headroom: u32,
    /// Words of degree `<= bound`, in ascending canonical order; the
    /// position is the column id.
    words: Vec<Word>,
    ids: HashMap<Word, u32>,
    /// `level_end[d]` = number of words of degree `<= d`.
    level_end: Vec<usize>,
    /// Rows sorted by descending pivot.
    rows: Vec<ReducedRow>,
    row_of: HashMap<u32, usize>,
    dims: Vec<usize>,
    stats: BuildStats,
}

/// Grading by `Z/2 x Z/2` under which every relation family is homogeneous;
/// it splits elimination into independent blocks.
fn letter_class(g: crate::freealg::Generator) -> u8 {
    let odd = g.index % 2 == 1;
    match g.family {
        Family::Wminus => if odd { 2 } else { 1 },
        Family::Wplus => if odd { 1 } else { 2 },
        Family::Gcal | Family::Gtil => if odd { 3 } else { 0 },
        Family::Z => 0,
    }
}

fn word_class(w: &Word) -> u8 {
    w.letters().iter().fold(0, |acc, &g| acc ^ letter_class(g))
}

/// Number of words of each exact degree, without materializing them.
fn count_words(alphabet: Alphabet, scheme: DegreeScheme, bound: u32) -> Result<Vec<u128>, AlgebraError> {
    let gens = scheme.generators_up_to(alphabet, bound)?;
    let mut c = vec![0u128; bound as usize + 1];
    c[0] = 1;
    for d in 1..=bound as usize {
        let mut s = 0u128;
        for &g in &gens {
            let gd = scheme.gen_degree(g) as usize;
            if gd <= d {
                s = s.saturating_add(c[d - gd]);
            }
        }
        c[d] = s;
    }
    Ok(c)
}

/// Build the truncated quotient with explicit headroom.
pub fn build(p: PresentationId, bound: u32, headroom: u32) -> Result<TruncatedQuotient, QuotientError> {
    build_with_limits(p, bound, headroom, Limits::default())
}

pub fn build_with_limits(
    p: PresentationId,
    bound: u32,
    headroom: u32,
    limits: Limits,
) -> Result<TruncatedQuotient, QuotientError> {
    let alphabet = p.alphabet();
    let scheme = p.scheme();
    let top = bound + headroom;
    let mut stats = BuildStats::default();

    let counts = count_words(alphabet, scheme, top)?;
    let total: u128 = counts.iter().sum();
    if total > limits.max_words as u128 {
        return Err(QuotientError::ResourceLimit {
            what: format!("{total} words up to degree {top} exceed the limit of {}", limits.max_words),
            progress: stats,
        });
    }

    let t0 = Instant::now();
    let levels = enumerate_words_by_degree(alphabet, scheme, top)?;
    let mut level_end = Vec::with_capacity(levels.len());
    let mut words: Vec<Word> = Vec::with_capacity(total as usize);
    for level in &levels {
        words.extend(level.iter().cloned());
        level_end.push(words.len());
    }
    stats.words = words.len();
    let ids: HashMap<Word, u32> = words.iter().enumerate().map(|(i, w)| (w.clone(), i as u32)).collect();

    let relations = instantiate(p, top);
    stats.relations = relations.len();
    let homogeneous = relations.iter().all(|r| {
        let mut cls = r.poly.terms().keys().map(word_class);
        let first = cls.next();
        cls.all(|c| Some(c) == first)
    });

    // Generate padded rows `u r v`, tagged with their block.
    let mut rows: Vec<(u8, WorkRow)> = Vec::new();
    for rel in &relations {
        let e = rel.poly.degree(scheme)?;
        let cleared: Vec<(Word, kernel::Lp)> = {
            let tmp: Vec<(u32, &RationalFunction)> =
                rel.poly.terms().values().enumerate().map(|(i, c)| (i as u32, c)).collect();
            let keys: Vec<&Word> = rel.poly.terms().keys().collect();
            clear_denominators(tmp).into_iter().map(|(i, v)| (keys[i as usize].clone(), v)).collect()
        };
        let rel_class = if homogeneous { word_class(&cleared[0].0) } else { 0 };
        let room = top - e;
        for du in 0..=room {
            for u in &levels[du as usize] {
                for dv in 0..=(room - du) {
                    for v in &levels[dv as usize] {
                        let row: WorkRow = cleared
                            .iter()
                            .map(|(w, c)| {
                                let mut full = u.clone();
                                full.0.extend_from_slice(w.letters());
                                full.0.extend_from_slice(v.letters());
                                (ids[&full], c.clone())
                            })
                            .collect();
                        let block = if homogeneous { word_class(u) ^ rel_class ^ word_class(v) } else { 0 };
                        rows.push((block, row));
                        if rows.len() > limits.max_rows {
                            stats.rows_generated = rows.len();
                            stats.generation_millis = t0.elapsed().as_millis() as u64;
                            return Err(QuotientError::ResourceLimit {
                                what: format!("more than {} padded relation rows", limits.max_rows),
                                progress: stats,
                            });
                        }
                    }
                }
            }
        }
    }
    stats.rows_generated = rows.len();
    stats.generation_millis = t0.elapsed().as_millis() as u64;

    let nblocks = if homogeneous { 4 } else { 1 };
    stats.blocks = nblocks;
    let mut blocks: Vec<Vec<WorkRow>> = vec![Vec::new(); nblocks];
    for (b, r) in rows {
        blocks[b as usize].push(r);
    }
    for b in blocks.iter_mut() {
        b.sort_by_key(|r| (*r.keys().next_back().unwrap_or(&0), r.len()));
    }

    let ncols = words.len();
    let n_keep = level_end[bound as usize] as u32;
    let t1 = Instant::now();
    let results: Vec<(Vec<ReducedRow>, usize, u64, u64)> = blocks
        .into_par_iter()
        .map(|rows| {
            let mut ech = Echelon::new(ncols);
            for r in rows {
                ech.insert(r);
            }
            let total_pivots = ech.rank();
            let t2 = Instant::now();
            ech.interreduce(n_keep);
            let reduced: Vec<ReducedRow> = ech
                .pivot_cols()
                .filter(|&c| c < n_keep)
                .map(|c| {
                    let piv = ech.pivot(c).unwrap();
                    let (_, lead) = piv.lead();
                    ReducedRow {
                        pivot: c,
                        tail: piv.entries[1..].iter().map(|(col, v)| (*col, v.ratio(lead))).collect(),
                    }
                })
                .collect();
            (reduced, total_pivots, ech.reductions, t2.elapsed().as_millis() as u64)
        })
        .collect();
    let mut all_rows = Vec::new();
    for (rs, np, red, ms) in results {
        all_rows.extend(rs);
        stats.pivots += np;
        stats.reductions += red;
        stats.interreduction_millis = stats.interreduction_millis.max(ms);
    }
    stats.elimination_millis = t1.elapsed().as_millis() as u64;
    all_rows.sort_by(|a, b| b.pivot.cmp(&a.pivot));
    stats.retained_pivots = all_rows.len();

    words.truncate(n_keep as usize);
    let ids: HashMap<Word, u32> = ids.into_iter().filter(|(_, i)| *i < n_keep).collect();
    level_end.truncate(bound as usize + 1);
    let row_of: HashMap<u32, usize> = all_rows.iter().enumerate().map(|(i, r)| (r.pivot, i)).collect();
    let dims = (0..=bound as usize)
        .map(|d| level_end[d] - all_rows.iter().filter(|r| (r.pivot as usize) < level_end[d]).count())
        .collect();

    Ok(TruncatedQuotient {
        presentation: p,
        bound,
        headroom,
        words,
        ids,
        level_end,
        rows: all_rows,
        row_of,
        dims,
        stats,
    })
}

/// Largest headroom tried by [`build_certified`].
pub const MAX_AUTO_HEADROOM: u32 = 4;

/// Build with headroom 0, escalating by 2 while some level dimension exceeds
/// the expected count. Returns the first build whose dimensions match, or
/// the last attempt if none did.
pub fn build_certified(p: PresentationId, bound: u32, limits: Limits) -> Result<TruncatedQuotient, QuotientError> {
    let expected = expected_dims(p, bound);
    let mut h = 0;
    loop {
        let q = build_with_limits(p, bound, h, limits)?;
        let exceeds = q.dims.iter().zip(&expected).any(|(a, b)| a > b);
        if !exceeds || h >= MAX_AUTO_HEADROOM {
            return Ok(q);
        }
        h += 2;
    }
}

/// Cumulative counts `sum_{m <= d} [x^m] prod_j (1 - x^j)^(-g_j)` where
/// `g_j` is the number of PBW generators of degree `j`.
fn cumulative_multiset_counts(gens_per_degree: impl Fn(usize) -> u64, bound: u32) -> Vec<usize> {
    let n = bound as usize;
    let mut series = vec![0u64; n + 1];
    series[0] = 1;
    for j in 1..=n {
        for _ in 0..gens_per_degree(j) {
            for m in j..=n {
                series[m] += series[m - j];
            }
        }
    }
    let mut acc = 0;
    series
        .into_iter()
        .map(|c| {
            acc += c as usize;
            acc
        })
        .collect()
}

/// Dimensions predicted by the PBW theorems of each presentation, for
/// degrees `0..=bound`.
pub fn expected_dims(p: PresentationId, bound: u32) -> Vec<usize> {
    match p {
        PresentationId::AltFull
        | PresentationId::AltReduced
        | PresentationId::EssCompact
        | PresentationId::EssCompactSigma => cumulative_multiset_counts(|_| 2, bound),
        PresentationId::OqDg => cumulative_multiset_counts(|j| if j % 2 == 1 { 2 } else { 1 }, bound),
        PresentationId::PolyZ => cumulative_multiset_counts(|_| 1, bound),
    }
}

impl TruncatedQuotient {
    pub fn presentation(&self) -> PresentationId {
        self.presentation
    }

    pub fn alphabet(&self) -> Alphabet {
        self.presentation.alphabet()
    }

    pub fn scheme(&self) -> DegreeScheme {
        self.presentation.scheme()
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn headroom(&self) -> u32 {
        self.headroom
    }

    pub fn stats(&self) -> &BuildStats {
        &self.stats
    }

    /// Dimension of the degree-`<= d` filtration component, `d = 0..=D`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// True when every level matches the PBW prediction.
    pub fn certified(&self) -> bool {
        self.dims == expected_dims(self.presentation, self.bound)
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word_id(&self, w: &Word) -> Option<u32> {
        self.ids.get(w).copied()
    }

    /// Number of words of degree `<= d`.
    pub fn words_up_to(&self, d: u32) -> usize {
        self.level_end[d.min(self.bound) as usize]
    }

    pub fn is_pivot(&self, w: &Word) -> bool {
        self.word_id(w).is_some_and(|i| self.row_of.contains_key(&i))
    }

    /// Non-pivot words of degree `<= d`: a basis of the degree-`<= d`
    /// component.
    pub fn standard_words(&self, d: u32) -> Vec<&Word> {
        (0..self.words_up_to(d))
            .filter(|i| !self.row_of.contains_key(&(*i as u32)))
            .map(|i| &self.words[i])
            .collect()
    }

    /// Echelon rows as polynomials, pivot first, descending pivot order.
    pub fn rows(&self) -> &[ReducedRow] {
        &self.rows
    }

    pub fn row_poly(&self, r: &ReducedRow) -> NcPoly {
        let a = self.alphabet();
        let mut p = NcPoly::word(a, self.words[r.pivot as usize].clone());
        for (c, v) in &r.tail {
            p.add_term(self.words[*c as usize].clone(), v);
        }
        p
    }

    fn check_input(&self, x: &NcPoly) -> Result<(), QuotientError> {
        if x.alphabet() != self.alphabet() {
            return Err(QuotientError::WrongAlphabet { expected: self.alphabet(), got: x.alphabet() });
        }
        let degree = x.degree(self.scheme())?;
        if degree > self.bound {
            return Err(QuotientError::DegreeOverflow { degree, bound: self.bound });
        }
        Ok(())
    }

    /// Coordinates of the normal form, keyed by column id.
    pub fn normal_coords(&self, x: &NcPoly) -> Result<BTreeMap<u32, RationalFunction>, QuotientError> {
        self.check_input(x)?;
        let mut acc: BTreeMap<u32, RationalFunction> = BTreeMap::new();
        let mut add = |col: u32, v: RationalFunction| {
            let slot = acc.entry(col).or_default();
            *slot += &v;
            if slot.is_zero() {
                acc.remove(&col);
            }
        };
        for (w, c) in x.terms() {
            let id = self.ids[w];
            match self.row_of.get(&id) {
                Some(&ri) => {
                    for (col, v) in &self.rows[ri].tail {
                        add(*col, -(c * v));
                    }
                }
                None => add(id, c.clone()),
            }
        }
        Ok(acc)
    }

    /// Canonical representative modulo the ideal component.
    pub fn normal_form(&self, x: &NcPoly) -> Result<NcPoly, QuotientError> {
        let coords = self.normal_coords(x)?;
        Ok(NcPoly::from_terms(
            self.alphabet(),
            coords.into_iter().map(|(c, v)| (self.words[c as usize].clone(), v)),
        ))
    }

    pub fn is_zero_mod(&self, x: &NcPoly) -> Result<bool, QuotientError> {
        Ok(self.normal_coords(x)?.is_empty())
    }

    pub fn equal_mod(&self, x: &NcPoly, y: &NcPoly) -> Result<bool, QuotientError> {
        self.is_zero_mod(&x.try_sub(y)?)
    }

    /// Rank of the normal-form coordinate vectors of `xs`.
    pub fn rank_of(&self, xs: &[NcPoly]) -> Result<usize, QuotientError> {
        let coords: Vec<BTreeMap<u32, RationalFunction>> =
            xs.par_iter().map(|x| self.normal_coords(x)).collect::<Result<_, _>>()?;
        Ok(rank_of_coords(self.words.len(), coords))
    }
}

/// Incremental rank computation in a quotient: vectors are pushed one at a
/// time and the running rank is available after each push.
pub struct RankBuilder<'a> {
    quotient: &'a TruncatedQuotient,
    echelon: Echelon,
    rank: usize,
}

impl<'a> RankBuilder<'a> {
    pub fn new(quotient: &'a TruncatedQuotient) -> Self {
        RankBuilder { quotient, echelon: Echelon::new(quotient.words.len()), rank: 0 }
    }

    /// Adds the normal form of `x`; returns whether the rank grew.
    pub fn push(&mut self, x: &NcPoly) -> Result<bool, QuotientError> {
        let coords = self.quotient.normal_coords(x)?;
        if coords.is_empty() {
            return Ok(false);
        }
        let row = clear_denominators(coords.iter().map(|(k, v)| (*k, v)));
        let grew = self.echelon.insert(row).is_some();
        self.rank += grew as usize;
        Ok(grew)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Rank of sparse coordinate vectors over `Q(q)`.
pub(crate) fn rank_of_coords(ncols: usize, coords: Vec<BTreeMap<u32, RationalFunction>>) -> usize {
    let mut rows: Vec<WorkRow> = coords
        .iter()
        .filter(|c| !c.is_empty())
        .map(|c| clear_denominators(c.iter().map(|(k, v)| (*k, v))))
        .collect();
    rows.sort_by_key(|r| (*r.keys().next_back().unwrap(), r.len()));
    let mut ech = Echelon::new(ncols);
    rows.into_iter().filter_map(|r| ech.insert(r)).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_counts() {
        assert_eq!(expected_dims(PresentationId::AltFull, 8), vec![1, 3, 8, 18, 38, 74, 139, 249, 434]);
        assert_eq!(expected_dims(PresentationId::OqDg, 8), vec![1, 3, 7, 15, 29, 53, 93, 157, 257]);
        assert_eq!(expected_dims(PresentationId::PolyZ, 5), vec![1, 2, 4, 7, 12, 19]);
    }
}
