//! The six presentations as data: alphabet, degree scheme and a relation
//! family instantiable up to a degree bound.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::freealg::{commutator, q_commutator, q_commutator_pow, Alphabet, DegreeScheme, Generator, NcPoly};
use crate::ring::consts;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PresentationId {
    /// Two generators with the two q-Dolan/Grady relations.
    OqDg,
    /// All alternating generators with the full relation list.
    AltFull,
    /// Alternating generators with the short relation list that implies the rest.
    AltReduced,
    /// Essential generators with the compact relation list.
    EssCompact,
    /// Mirror image of [`PresentationId::EssCompact`] under `W0 <-> W1`, `Gt <-> G`.
    EssCompactSigma,
    /// Commutative polynomial ring in `z[1], z[2], ...`.
    PolyZ,
}

impl PresentationId {
    pub const ALL: [PresentationId; 6] = [
        PresentationId::OqDg,
        PresentationId::AltFull,
        PresentationId::AltReduced,
        PresentationId::EssCompact,
        PresentationId::EssCompactSigma,
        PresentationId::PolyZ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PresentationId::OqDg => "OQ_DG",
            PresentationId::AltFull => "ALT_FULL",
            PresentationId::AltReduced => "ALT_REDUCED",
            PresentationId::EssCompact => "ESS_COMPACT",
            PresentationId::EssCompactSigma => "ESS_COMPACT_SIGMA",
            PresentationId::PolyZ => "POLY_Z",
        }
    }

    pub fn alphabet(self) -> Alphabet {
        match self {
            PresentationId::OqDg => Alphabet::Oq,
            PresentationId::AltFull | PresentationId::AltReduced => Alphabet::Alt,
            PresentationId::EssCompact => Alphabet::Ess,
            PresentationId::EssCompactSigma => Alphabet::EssSigma,
            PresentationId::PolyZ => Alphabet::Z,
        }
    }

    pub fn scheme(self) -> DegreeScheme {
        match self {
            PresentationId::OqDg => DegreeScheme::LenDeg,
            PresentationId::AltFull | PresentationId::AltReduced => DegreeScheme::AltDeg,
            PresentationId::EssCompact | PresentationId::EssCompactSigma => DegreeScheme::EssDeg,
            PresentationId::PolyZ => DegreeScheme::ZDeg,
        }
    }

    pub fn instantiate(self, bound: u32) -> Vec<Relation> {
        instantiate(self, bound)
    }
}

impl fmt::Display for PresentationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PresentationId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        PresentationId::ALL
            .into_iter()
            .find(|p| p.name() == norm)
            .ok_or_else(|| format!("unknown presentation '{s}'"))
    }
}

/// One instance of a relation family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub family: &'static str,
    pub k: Option<u32>,
    pub l: Option<u32>,
    pub poly: NcPoly,
}

impl Relation {
    pub fn label(&self) -> String {
        match (self.k, self.l) {
            (Some(k), Some(l)) => format!("{}(k={k},l={l})", self.family),
            (Some(k), None) => format!("{}(k={k})", self.family),
            _ => self.family.to_string(),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.label(), self.poly)
    }
}

/// Scheme degree of a relation polynomial.
pub fn relation_degree(r: &NcPoly, scheme: DegreeScheme) -> u32 {
    r.degree(scheme).unwrap_or(0)
}

/// Relation instances of degree at most `bound`, deduplicated up to sign,
/// in (family, k, l) order.
pub fn instantiate(p: PresentationId, bound: u32) -> Vec<Relation> {
    let mut out = Collector::new(p.scheme(), bound);
    match p {
        PresentationId::OqDg => oq_relations(&mut out),
        PresentationId::AltFull => alt_relations(&mut out, false),
        PresentationId::AltReduced => alt_relations(&mut out, true),
        PresentationId::EssCompact => ess_relations(&mut out, false),
        PresentationId::EssCompactSigma => ess_relations(&mut out, true),
        PresentationId::PolyZ => z_relations(&mut out),
    }
    out.rels
}

struct Collector {
    scheme: DegreeScheme,
    bound: u32,
    seen: HashSet<NcPoly>,
    rels: Vec<Relation>,
}

impl Collector {
    fn new(scheme: DegreeScheme, bound: u32) -> Self {
        Collector { scheme, bound, seen: HashSet::new(), rels: Vec::new() }
    }

    fn push(&mut self, family: &'static str, k: Option<u32>, l: Option<u32>, poly: NcPoly) {
        if poly.is_zero() || relation_degree(&poly, self.scheme) > self.bound {
            return;
        }
        if self.seen.contains(&poly) || self.seen.contains(&-&poly) {
            return;
        }
        self.seen.insert(poly.clone());
        self.rels.push(Relation { family, k, l, poly });
    }
}

fn br(a: &NcPoly, b: &NcPoly) -> NcPoly {
    commutator(a, b).expect("same alphabet")
}

fn qbr(a: &NcPoly, b: &NcPoly) -> NcPoly {
    q_commutator(a, b).expect("same alphabet")
}

/// `[X,[X,[X,Y]_q]_{q^-1}] - (q^2-q^-2)^2 [Y,X]`, i.e. the q-Dolan/Grady
/// relation with `X` leading.
pub fn qdg_relation(x: &NcPoly, y: &NcPoly) -> NcPoly {
    let inner = qbr(x, y);
    let mid = q_commutator_pow(x, &inner, -1).expect("same alphabet");
    br(x, &mid) - br(y, x).scale(&consts::qdg())
}

fn oq_relations(out: &mut Collector) {
    let a = Alphabet::Oq;
    let w0 = NcPoly::gen(a, Generator::W0);
    let w1 = NcPoly::gen(a, Generator::W1);
    out.push("qdg_W0", None, None, qdg_relation(&w0, &w1));
    out.push("qdg_W1", None, None, qdg_relation(&w1, &w0));
}

/// Alternating generator `W[n]`.
fn aw(n: i64) -> NcPoly {
    NcPoly::gen(Alphabet::Alt, Generator::w(n))
}

/// `G[k]` in the alternating alphabet; `k = 0` gives the scalar.
pub fn alt_g(k: u32) -> NcPoly {
    if k == 0 {
        NcPoly::scalar(Alphabet::Alt, consts::gg0())
    } else {
        NcPoly::gen(Alphabet::Alt, Generator::g(k))
    }
}

/// `Gt[k]` in the alternating alphabet; `k = 0` gives the scalar.
pub fn alt_gt(k: u32) -> NcPoly {
    if k == 0 {
        NcPoly::scalar(Alphabet::Alt, consts::gg0())
    } else {
        NcPoly::gen(Alphabet::Alt, Generator::gt(k))
    }
}

fn alt_relations(out: &mut Collector, reduced: bool) {
    let b = out.bound;
    // Index ranges large enough that every instance of degree <= b is seen.
    let kmax = b / 2 + 1;
    let two = consts::qint(2);
    let rho = consts::rho();
    for k in 0..=kmax {
        let (ki, kk) = (k as i64, Some(k));
        let lhs = |x: NcPoly| x.scale(&two) - alt_gt(k + 1) + alt_g(k + 1);
        out.push("comm_W0_Wp", kk, None, lhs(br(&aw(0), &aw(ki + 1))));
        out.push("comm_Wm_W1", kk, None, lhs(br(&aw(-ki), &aw(1))));
    }
    for k in 0..=kmax {
        let (ki, kk) = (k as i64, Some(k));
        let rhs = aw(-ki - 1).scale(&rho) - aw(ki + 1).scale(&rho);
        out.push("qcomm_W0_G", kk, None, qbr(&aw(0), &alt_g(k + 1)) - &rhs);
        out.push("qcomm_Gt_W0", kk, None, qbr(&alt_gt(k + 1), &aw(0)) - &rhs);
    }
    for k in 0..=kmax {
        let (ki, kk) = (k as i64, Some(k));
        let rhs = aw(ki + 2).scale(&rho) - aw(-ki).scale(&rho);
        out.push("qcomm_G_W1", kk, None, qbr(&alt_g(k + 1), &aw(1)) - &rhs);
        out.push("qcomm_W1_Gt", kk, None, qbr(&aw(1), &alt_gt(k + 1)) - &rhs);
    }
    for k in 0..=kmax {
        let ki = k as i64;
        let lmax = if reduced { 0 } else { kmax };
        for l in 0..=lmax {
            let li = l as i64;
            out.push("comm_Wm_Wm", Some(k), Some(l), br(&aw(-ki), &aw(-li)));
            out.push("comm_Wp_Wp", Some(k), Some(l), br(&aw(ki + 1), &aw(li + 1)));
        }
    }
    let pairs = || (0..=kmax).flat_map(move |k| (0..=kmax).map(move |l| (k, l)));
    if !reduced {
        for (k, l) in pairs() {
            let (ki, li) = (k as i64, l as i64);
            let p = br(&aw(-ki), &aw(li + 1)) + br(&aw(ki + 1), &aw(-li));
            out.push("mixed_Wm_Wp", Some(k), Some(l), p);
        }
        for (k, l) in pairs() {
            let (ki, li) = (k as i64, l as i64);
            let p = br(&aw(-ki), &alt_g(l + 1)) + br(&alt_g(k + 1), &aw(-li));
            out.push("mixed_Wm_G", Some(k), Some(l), p);
        }
        for (k, l) in pairs() {
            let (ki, li) = (k as i64, l as i64);
            let p = br(&aw(-ki), &alt_gt(l + 1)) + br(&alt_gt(k + 1), &aw(-li));
            out.push("mixed_Wm_Gt", Some(k), Some(l), p);
        }
        for (k, l) in pairs() {
            let (ki, li) = (k as i64, l as i64);
            let p = br(&aw(ki + 1), &alt_g(l + 1)) + br(&alt_g(k + 1), &aw(li + 1));
            out.push("mixed_Wp_G", Some(k), Some(l), p);
        }
        for (k, l) in pairs() {
            let (ki, li) = (k as i64, l as i64);
            let p = br(&aw(ki + 1), &alt_gt(l + 1)) + br(&alt_gt(k + 1), &aw(li + 1));
            out.push("mixed_Wp_Gt", Some(k), Some(l), p);
        }
    }
    for (k, l) in pairs() {
        if !reduced {
            out.push("comm_G_G", Some(k), Some(l), br(&alt_g(k + 1), &alt_g(l + 1)));
        }
        out.push("comm_Gt_Gt", Some(k), Some(l), br(&alt_gt(k + 1), &alt_gt(l + 1)));
    }
    if !reduced {
        for (k, l) in pairs() {
            let p = br(&alt_gt(k + 1), &alt_g(l + 1)) + br(&alt_g(k + 1), &alt_gt(l + 1));
            out.push("mixed_G_Gt", Some(k), Some(l), p);
        }
    }
}

/// Letters of the compact presentation. In the mirrored alphabet the roles
/// of `W0`/`W1` and of the two G-families are exchanged.
struct EssLetters {
    alphabet: Alphabet,
    x: NcPoly,
    y: NcPoly,
    sigma: bool,
}

impl EssLetters {
    fn new(sigma: bool) -> Self {
        let alphabet = if sigma { Alphabet::EssSigma } else { Alphabet::Ess };
        let w0 = NcPoly::gen(alphabet, Generator::W0);
        let w1 = NcPoly::gen(alphabet, Generator::W1);
        let (x, y) = if sigma { (w1, w0) } else { (w0, w1) };
        EssLetters { alphabet, x, y, sigma }
    }

    /// The G-type generator of index `k` (scalar at `k = 0`).
    fn g(&self, k: u32) -> NcPoly {
        if k == 0 {
            return NcPoly::scalar(self.alphabet, consts::gg0());
        }
        let g = if self.sigma { Generator::g(k) } else { Generator::gt(k) };
        NcPoly::gen(self.alphabet, g)
    }
}

/// Right-hand sides of the two recursive compact relations for index `k`.
/// With `k = 0` they reduce to the degree-3 relations.
pub(crate) fn ess_recursive_pair(sigma: bool, k: u32) -> (NcPoly, NcPoly) {
    let e = EssLetters::new(sigma);
    let c = consts::qdg();
    let (x, y) = (&e.x, &e.y);
    let first = br(&e.g(k + 1), x).scale(&c) - br(x, &qbr(x, &qbr(y, &e.g(k))));
    let second = br(y, &e.g(k + 1)).scale(&c) - br(&qbr(&qbr(&e.g(k), x), y), y);
    (first, second)
}

fn ess_relations(out: &mut Collector, sigma: bool) {
    let e = EssLetters::new(sigma);
    let b = out.bound;
    let kmax = b / 2 + 1;
    let (x, y) = (&e.x, &e.y);
    out.push("qdg_first", None, None, qdg_relation(x, y));
    out.push("qdg_second", None, None, qdg_relation(y, x));
    out.push("low_left", None, None, br(x, &e.g(1)) - br(x, &qbr(x, y)));
    out.push("low_right", None, None, br(&e.g(1), y) - br(&qbr(x, y), y));
    let pairs: Vec<_> = (1..=kmax).map(|k| (k, ess_recursive_pair(sigma, k))).collect();
    for (k, (first, _)) in &pairs {
        out.push("rec_left", Some(*k), None, first.clone());
    }
    for (k, (_, second)) in &pairs {
        out.push("rec_right", Some(*k), None, second.clone());
    }
    for k in 0..=kmax {
        for l in 0..=kmax {
            out.push("comm_G_G", Some(k), Some(l), br(&e.g(k + 1), &e.g(l + 1)));
        }
    }
}

fn z_relations(out: &mut Collector) {
    let a = Alphabet::Z;
    let b = out.bound;
    for m in 1..=b {
        for n in (m + 1)..=b {
            let zm = NcPoly::gen(a, Generator::z(m));
            let zn = NcPoly::gen(a, Generator::z(n));
            out.push("commute", Some(m), Some(n), br(&zm, &zn));
        }
    }
}
