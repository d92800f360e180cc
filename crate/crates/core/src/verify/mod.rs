//! Named checks of identities, presentation equivalences and dimension
//! formulas, each certified up to a degree bound.

mod checks;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::freealg::NcPoly;
use crate::presentations::PresentationId;
use crate::quotient::{QuotientCache, QuotientError, TruncatedQuotient};
use crate::ring::consts;

pub use checks::{factor_span_rank, sorted_shape_words};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped-resource")]
    SkippedResource,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::SkippedResource => "skipped-resource",
        })
    }
}

fn display_str<T: fmt::Display, S: Serializer>(x: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// An element whose normal form should have vanished (or, for dimension
/// checks, a basis element beyond the expected count). `expression` is
/// in CLI syntax, so `normalize` reproduces `normal_form`.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub description: String,
    pub presentation: PresentationId,
    #[serde(serialize_with = "display_str")]
    pub expression: NcPoly,
    #[serde(serialize_with = "display_str")]
    pub normal_form: NcPoly,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub presentation: String,
    #[serde(rename = "D")]
    pub degree: u32,
    #[serde(rename = "H")]
    pub headroom: u32,
    pub status: CheckStatus,
    pub witnesses: Vec<Witness>,
    pub millis: u64,
    pub details: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    /// Key-sorted JSON value.
    pub fn to_json(&self) -> serde_json::Value {
        // Round-tripping through `Value` sorts object keys.
        serde_json::to_value(self).expect("report serializes")
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown check '{0}'")]
    UnknownCheck(String),
}

/// Stable public check names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckName {
    PbwDims,
    Newrels1,
    QdgInO,
    AltExpressions,
    Newrels,
    NaturalWelldef,
    DimsMatch,
    Mingen,
    FactorRecursion,
    SortedSpanning,
    TensorDim,
    Morphisms,
    CentralG1,
    GwcomWind,
    Nnot,
    Wwalt,
    DamianiIndependence,
    SigmaVariants,
    BdeltaConsistency,
}

impl CheckName {
    pub const ALL: [CheckName; 19] = [
        CheckName::PbwDims,
        CheckName::Newrels1,
        CheckName::QdgInO,
        CheckName::AltExpressions,
        CheckName::Newrels,
        CheckName::NaturalWelldef,
        CheckName::DimsMatch,
        CheckName::Mingen,
        CheckName::FactorRecursion,
        CheckName::SortedSpanning,
        CheckName::TensorDim,
        CheckName::Morphisms,
        CheckName::CentralG1,
        CheckName::GwcomWind,
        CheckName::Nnot,
        CheckName::Wwalt,
        CheckName::DamianiIndependence,
        CheckName::SigmaVariants,
        CheckName::BdeltaConsistency,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckName::PbwDims => "check_pbw_dims",
            CheckName::Newrels1 => "check_newrels1",
            CheckName::QdgInO => "check_qdg_in_O",
            CheckName::AltExpressions => "check_alt_expressions",
            CheckName::Newrels => "check_newrels",
            CheckName::NaturalWelldef => "check_natural_welldef",
            CheckName::DimsMatch => "check_dims_match",
            CheckName::Mingen => "check_mingen",
            CheckName::FactorRecursion => "check_factor_recursion",
            CheckName::SortedSpanning => "check_sorted_spanning",
            CheckName::TensorDim => "check_tensor_dim",
            CheckName::Morphisms => "check_morphisms",
            CheckName::CentralG1 => "check_central_G1",
            CheckName::GwcomWind => "check_gwcom_wind",
            CheckName::Nnot => "check_nnot",
            CheckName::Wwalt => "check_wwalt",
            CheckName::DamianiIndependence => "check_damiani_independence",
            CheckName::SigmaVariants => "check_sigma_variants",
            CheckName::BdeltaConsistency => "check_bdelta_consistency",
        }
    }

    /// Checks computed in the two-generator algebra default to a smaller bound.
    pub fn default_degree(self) -> u32 {
        match self {
            CheckName::Nnot | CheckName::DamianiIndependence | CheckName::BdeltaConsistency => 6,
            _ => 8,
        }
    }

    /// Whether the check asserts identities (and so responds to mutation);
    /// the others compare dimensions and ranks only.
    pub fn has_identities(self) -> bool {
        !matches!(
            self,
            CheckName::PbwDims
                | CheckName::DimsMatch
                | CheckName::FactorRecursion
                | CheckName::SortedSpanning
                | CheckName::TensorDim
                | CheckName::DamianiIndependence
        )
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckName {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, VerifyError> {
        let t = s.trim();
        CheckName::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(t) || c.name()[6..].eq_ignore_ascii_case(t))
            .ok_or_else(|| VerifyError::UnknownCheck(s.to_string()))
    }
}

/// Runs checks against a shared quotient cache.
pub struct Verifier {
    cache: Arc<QuotientCache>,
    headroom: Option<u32>,
    mutate: bool,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier::new()
    }
}

impl Verifier {
    pub fn new() -> Self {
        Verifier { cache: Arc::new(QuotientCache::new()), headroom: None, mutate: false }
    }

    pub fn with_cache(cache: Arc<QuotientCache>) -> Self {
        Verifier { cache, headroom: None, mutate: false }
    }

    /// Fixed headroom instead of the certified automatic choice.
    pub fn headroom(mut self, h: Option<u32>) -> Self {
        self.headroom = h;
        self
    }

    /// Perturb every asserted identity by scaling its leading term by `q`;
    /// a sound harness then reports failure with nonzero witnesses.
    pub fn mutate(mut self, on: bool) -> Self {
        self.mutate = on;
        self
    }

    pub fn cache(&self) -> &Arc<QuotientCache> {
        &self.cache
    }

    pub fn run(&self, check: CheckName, degree: Option<u32>) -> CheckReport {
        let d = degree.unwrap_or_else(|| check.default_degree());
        let start = Instant::now();
        let mut ctx = Ctx::new(self, check, d);
        let result = checks::dispatch(&mut ctx, check, d);
        let status = match result {
            Ok(()) if ctx.failed => CheckStatus::Fail,
            Ok(()) => CheckStatus::Pass,
            Err(QuotientError::ResourceLimit { what, .. }) => {
                ctx.details.push(format!("resource limit: {what}"));
                CheckStatus::SkippedResource
            }
            Err(e) => {
                ctx.details.push(format!("error: {e}"));
                CheckStatus::Fail
            }
        };
        let mut names: Vec<&str> = ctx.used.iter().map(|(p, _)| p.name()).collect();
        names.dedup();
        CheckReport {
            check: check.name().to_string(),
            presentation: names.join("+"),
            degree: d,
            headroom: ctx.used.iter().map(|(_, h)| *h).max().unwrap_or(0),
            status,
            witnesses: ctx.witnesses,
            millis: start.elapsed().as_millis() as u64,
            details: ctx.details,
        }
    }

    /// Runs the named checks concurrently; reports come back in input order.
    pub fn run_suite(&self, names: &[CheckName], degree: Option<u32>) -> Vec<CheckReport> {
        names.par_iter().map(|&c| self.run(c, degree)).collect()
    }
}

/// Parse check names and run them with a fresh verifier. An empty list gives
/// an empty report.
pub fn run_suite(names: &[&str], degree: Option<u32>) -> Result<Vec<CheckReport>, VerifyError> {
    let parsed: Vec<CheckName> = names.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    Ok(Verifier::new().run_suite(&parsed, degree))
}

/// Per-run mutable state shared by the check bodies.
pub(crate) struct Ctx<'a> {
    verifier: &'a Verifier,
    pub failed: bool,
    pub witnesses: Vec<Witness>,
    pub details: Vec<String>,
    used: Vec<(PresentationId, u32)>,
}

impl<'a> Ctx<'a> {
    fn new(verifier: &'a Verifier, _check: CheckName, _d: u32) -> Self {
        Ctx { verifier, failed: false, witnesses: Vec::new(), details: Vec::new(), used: Vec::new() }
    }

    pub fn quotient(&mut self, p: PresentationId, d: u32) -> Result<Arc<TruncatedQuotient>, QuotientError> {
        let q = self.verifier.cache.get(p, d, self.verifier.headroom)?;
        if !self.used.iter().any(|(u, _)| *u == p) {
            self.used.push((p, q.headroom()));
        }
        Ok(q)
    }

    /// Assert `x` vanishes in `q` (after mutation, if enabled).
    pub fn expect_zero(&mut self, q: &TruncatedQuotient, desc: impl Into<String>, x: NcPoly) -> Result<(), QuotientError> {
        let x = if self.verifier.mutate { perturb(&x) } else { x };
        let nf = q.normal_form(&x)?;
        if !nf.is_zero() {
            self.failed = true;
            self.witnesses.push(Witness {
                description: desc.into(),
                presentation: q.presentation(),
                expression: x,
                normal_form: nf,
            });
        }
        Ok(())
    }

    /// Assert equality of two counts; on mismatch record `witness` if given.
    pub fn expect_count(
        &mut self,
        q: &TruncatedQuotient,
        desc: impl Into<String>,
        got: usize,
        want: usize,
        witness: Option<NcPoly>,
    ) {
        let desc = desc.into();
        if got == want {
            return;
        }
        self.failed = true;
        self.details.push(format!("{desc}: got {got}, expected {want}"));
        if let Some(w) = witness {
            if let Ok(nf) = q.normal_form(&w) {
                self.witnesses.push(Witness {
                    description: desc,
                    presentation: q.presentation(),
                    expression: w,
                    normal_form: nf,
                });
            }
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.details.push(s.into());
    }
}

/// Scale the leading term by `q`.
fn perturb(x: &NcPoly) -> NcPoly {
    let scheme = x.alphabet().default_scheme();
    let Some(w) = x.leading_word(scheme).cloned() else {
        // The zero identity: perturb by the unit.
        return NcPoly::one(x.alphabet());
    };
    let c = x.coeff(&w);
    let delta = &c * &consts::q(1) - c;
    let mut out = x.clone();
    out.add_term(w, &delta);
    out
}
