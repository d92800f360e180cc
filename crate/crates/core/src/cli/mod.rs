//! Command-line front end: `normalize`, `equal`, `dims`, `element`, `verify`.
//!
//! Exit codes: 0 success or pass, 1 check failure or inequality, 2 usage or
//! parse error, 3 resource limit.

mod parse;

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

pub use parse::{parse, ParseError};

use crate::freealg::NcPoly;
use crate::presentations::PresentationId;
use crate::quotient::{expected_dims, QuotientCache, QuotientError};
use crate::verify::{CheckName, CheckReport, CheckStatus, Verifier, VerifyError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Quotient(QuotientError::ResourceLimit { .. }) => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "oqcalc", version, about = "Normal forms, dimensions and identity checks for the q-Onsager family")]
pub struct Cli {
    /// Worker threads for quotient builds and the check suite.
    #[arg(long, global = true, env = "QONSAGER_THREADS")]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the normal form of an expression.
    Normalize {
        expr: String,
        #[arg(long, short, default_value = "ALT_FULL")]
        presentation: PresentationId,
        /// Degree bound; defaults to the expression's degree.
        #[arg(long, short)]
        degree: Option<u32>,
        /// Fixed headroom; defaults to the certified automatic choice.
        #[arg(long)]
        headroom: Option<u32>,
    },
    /// Decide whether two expressions agree in the quotient.
    Equal {
        left: String,
        right: String,
        #[arg(long, short, default_value = "ALT_FULL")]
        presentation: PresentationId,
        #[arg(long, short)]
        degree: Option<u32>,
        #[arg(long)]
        headroom: Option<u32>,
    },
    /// Print dim of the degree <= d component for d = 0..=D.
    Dims {
        #[arg(long, short, default_value = "ALT_FULL")]
        presentation: PresentationId,
        #[arg(long, short, default_value_t = 6)]
        degree: u32,
        #[arg(long)]
        headroom: Option<u32>,
    },
    /// Expand a named element, e.g. `W[-2]`, `B[a0,1]`, `Bd[2]`.
    Element {
        name: String,
        /// The element is written in this presentation's alphabet.
        #[arg(long, short, default_value = "ESS_COMPACT")]
        presentation: PresentationId,
    },
    /// Run named checks (all if none are given).
    Verify {
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Bound for every check; defaults to each check's own bound.
        #[arg(long, short)]
        degree: Option<u32>,
        #[arg(long)]
        headroom: Option<u32>,
        /// Perturb each asserted identity; identity checks should then fail.
        #[arg(long)]
        mutate: bool,
        /// Report zero timings so output is byte-for-byte reproducible.
        #[arg(long)]
        no_timings: bool,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn degree_of(x: &NcPoly, p: PresentationId) -> u32 {
    x.degree(p.scheme()).unwrap_or(0)
}

pub fn cmd_normalize(
    cache: &QuotientCache,
    expr: &str,
    p: PresentationId,
    degree: Option<u32>,
    headroom: Option<u32>,
) -> Result<(NcPoly, NcPoly, u32, u32), CliError> {
    let x = parse(expr, p.alphabet())?;
    let d = degree.unwrap_or_else(|| degree_of(&x, p));
    let q = cache.get(p, d, headroom)?;
    let nf = q.normal_form(&x)?;
    Ok((x, nf, d, q.headroom()))
}

/// Returns `(equal, normal form of left - right, D, H)`.
pub fn cmd_equal(
    cache: &QuotientCache,
    left: &str,
    right: &str,
    p: PresentationId,
    degree: Option<u32>,
    headroom: Option<u32>,
) -> Result<(bool, NcPoly, u32, u32), CliError> {
    let a = parse(left, p.alphabet())?;
    let b = parse(right, p.alphabet())?;
    let d = degree.unwrap_or_else(|| degree_of(&a, p).max(degree_of(&b, p)));
    let q = cache.get(p, d, headroom)?;
    let diff = q.normal_form(&a.try_sub(&b).map_err(QuotientError::from)?)?;
    Ok((diff.is_zero(), diff, d, q.headroom()))
}

pub fn cmd_dims(
    cache: &QuotientCache,
    p: PresentationId,
    degree: u32,
    headroom: Option<u32>,
) -> Result<(Vec<usize>, u32), CliError> {
    let q = cache.get(p, degree, headroom)?;
    Ok((q.dims().to_vec(), q.headroom()))
}

pub fn cmd_element(name: &str, p: PresentationId) -> Result<NcPoly, CliError> {
    Ok(parse(name, p.alphabet())?)
}

pub fn cmd_verify(
    cache: Arc<QuotientCache>,
    names: &[String],
    degree: Option<u32>,
    headroom: Option<u32>,
    mutate: bool,
) -> Result<Vec<CheckReport>, CliError> {
    let checks: Vec<CheckName> = if names.is_empty() {
        CheckName::ALL.to_vec()
    } else {
        names.iter().map(|s| s.parse()).collect::<Result<_, _>>()?
    };
    let v = Verifier::with_cache(cache).headroom(headroom).mutate(mutate);
    Ok(v.run_suite(&checks, degree))
}

fn render_json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json renders");
    s.push('\n');
    s
}

/// Parse arguments and run one command, capturing output.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    if let Some(n) = cli.threads {
        // Fails harmlessly if a pool already exists in this process.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match execute(&cli) {
        Ok(o) => o,
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let cache = Arc::new(QuotientCache::new());
    let json = cli.format == Format::Json;
    let mut out = String::new();
    let mut code = 0;
    match &cli.command {
        Command::Normalize { expr, presentation, degree, headroom } => {
            let (x, nf, d, h) = cmd_normalize(&cache, expr, *presentation, *degree, *headroom)?;
            if json {
                out = render_json(&json!({
                    "presentation": presentation.name(),
                    "D": d,
                    "H": h,
                    "input": x.to_string(),
                    "normal_form": nf.to_string(),
                }));
            } else {
                writeln!(out, "{nf}").unwrap();
            }
        }
        Command::Equal { left, right, presentation, degree, headroom } => {
            let (eq, diff, d, h) = cmd_equal(&cache, left, right, *presentation, *degree, *headroom)?;
            code = if eq { 0 } else { 1 };
            if json {
                out = render_json(&json!({
                    "presentation": presentation.name(),
                    "D": d,
                    "H": h,
                    "equal": eq,
                    "difference": diff.to_string(),
                }));
            } else if eq {
                out.push_str("equal\n");
            } else {
                writeln!(out, "not equal\ndifference: {diff}").unwrap();
            }
        }
        Command::Dims { presentation, degree, headroom } => {
            let (dims, h) = cmd_dims(&cache, *presentation, *degree, *headroom)?;
            let expected = expected_dims(*presentation, *degree);
            if json {
                out = render_json(&json!({
                    "presentation": presentation.name(),
                    "D": degree,
                    "H": h,
                    "dims": dims,
                    "expected": expected,
                    "certified": dims == expected,
                }));
            } else {
                let s: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
                writeln!(out, "{}", s.join(" ")).unwrap();
            }
        }
        Command::Element { name, presentation } => {
            let x = cmd_element(name, *presentation)?;
            if json {
                out = render_json(&json!({
                    "alphabet": presentation.alphabet().name(),
                    "name": name,
                    "terms": x.len(),
                    "degree": degree_of(&x, *presentation),
                    "value": x.to_string(),
                }));
            } else {
                writeln!(out, "{x}").unwrap();
            }
        }
        Command::Verify { checks, degree, headroom, mutate, no_timings } => {
            let mut reports = cmd_verify(cache, checks, *degree, *headroom, *mutate)?;
            if *no_timings {
                for r in &mut reports {
                    r.millis = 0;
                }
            }
            if reports.iter().any(|r| r.status == CheckStatus::Fail) {
                code = 1;
            } else if reports.iter().any(|r| r.status == CheckStatus::SkippedResource) {
                code = 3;
            }
            if json {
                let v: Vec<serde_json::Value> = reports.iter().map(|r| r.to_json()).collect();
                out = render_json(&serde_json::Value::Array(v));
            } else {
                for r in &reports {
                    writeln!(
                        out,
                        "{:<28} {:<16} D={} H={} {} ms [{}]",
                        r.check,
                        r.status.to_string(),
                        r.degree,
                        r.headroom,
                        r.millis,
                        r.presentation
                    )
                    .unwrap();
                    for w in &r.witnesses {
                        writeln!(out, "    witness ({}): {} -> {}", w.description, w.expression, w.normal_form).unwrap();
                    }
                }
            }
        }
    }
    Ok(Outcome { code, stdout: out, stderr: String::new() })
}
