//! Root-vector analogs inside the subalgebra generated by `W[0]`, `W[1]`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::freealg::{commutator, Alphabet, Generator, NcPoly};
use crate::ring::consts;

/// Which simple root a real root vector is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BKind {
    Alpha0,
    Alpha1,
}

impl BKind {
    pub fn other(self) -> BKind {
        match self {
            BKind::Alpha0 => BKind::Alpha1,
            BKind::Alpha1 => BKind::Alpha0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BKind::Alpha0 => "a0",
            BKind::Alpha1 => "a1",
        }
    }
}

/// Which recursion defines the imaginary root vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BDeltaFormula {
    /// Built from the `alpha1` vectors and `W[0]`.
    ViaAlpha1,
    /// Built from the `alpha0` vectors and `W[1]`.
    ViaAlpha0,
}

/// Memo key: (alphabet, tilde, kind, n >= 0).
type Key = (Alphabet, bool, BKind, u32);

fn memo() -> &'static Mutex<HashMap<Key, NcPoly>> {
    static MEMO: OnceLock<Mutex<HashMap<Key, NcPoly>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// The pair `(x, y)` playing the roles of `W[0]`, `W[1]`; swapped for the
/// tilde family.
fn letters(alphabet: Alphabet, tilde: bool) -> (NcPoly, NcPoly) {
    let w0 = NcPoly::gen(alphabet, Generator::W0);
    let w1 = NcPoly::gen(alphabet, Generator::W1);
    if tilde {
        (w1, w0)
    } else {
        (w0, w1)
    }
}

fn delta(alphabet: Alphabet, tilde: bool) -> NcPoly {
    let (x, y) = letters(alphabet, tilde);
    (&y * &x).scale(&consts::q(-2)) - &x * &y
}

fn real(alphabet: Alphabet, tilde: bool, kind: BKind, n: i64) -> NcPoly {
    if n < 0 {
        return real(alphabet, tilde, kind.other(), -n - 1);
    }
    let n = n as u32;
    if let Some(p) = memo().lock().expect("memo lock").get(&(alphabet, tilde, kind, n)) {
        return p.clone();
    }
    let (x, y) = letters(alphabet, tilde);
    let value = match (n, kind) {
        (0, BKind::Alpha0) => x,
        (0, BKind::Alpha1) => y,
        _ => {
            // B_{n} = B_{n-2} ± q [B_delta, B_{n-1}] / ((q-q^-1)(q^2-q^-2)),
            // where B_{-1} of one kind is B_0 of the other.
            let prev = real(alphabet, tilde, kind, n as i64 - 1);
            let prev2 = real(alphabet, tilde, kind, n as i64 - 2);
            let c = consts::q(1) * consts::inv(&consts::b_const());
            let c = if kind == BKind::Alpha0 { c } else { -c };
            let br = commutator(&delta(alphabet, tilde), &prev).expect("same alphabet");
            prev2 + br.scale(&c)
        }
    };
    memo().lock().expect("memo lock").insert((alphabet, tilde, kind, n), value.clone());
    value
}

fn imaginary(alphabet: Alphabet, tilde: bool, n: u32, formula: BDeltaFormula) -> NcPoly {
    assert!(n >= 1, "imaginary root vectors start at n = 1");
    let (x, y) = letters(alphabet, tilde);
    let qm2 = consts::q(-2);
    let (kind, head) = match formula {
        BDeltaFormula::ViaAlpha1 => {
            let b = real(alphabet, tilde, BKind::Alpha1, n as i64 - 1);
            (BKind::Alpha1, (&b * &x).scale(&qm2) - &x * &b)
        }
        BDeltaFormula::ViaAlpha0 => {
            let b = real(alphabet, tilde, BKind::Alpha0, n as i64 - 1);
            (BKind::Alpha0, (&y * &b).scale(&qm2) - &b * &y)
        }
    };
    let mut sum = NcPoly::zero(alphabet);
    for l in 0..n.saturating_sub(1) {
        let a = real(alphabet, tilde, kind, l as i64);
        let b = real(alphabet, tilde, kind, (n - l - 2) as i64);
        sum = sum + &a * &b;
    }
    head + sum.scale(&(qm2 - consts::int(1)))
}

/// `B_delta = q^-2 W1 W0 - W0 W1` over the essential alphabet.
pub fn b_delta() -> NcPoly {
    delta(Alphabet::Ess, false)
}

/// `B_{n delta + alpha}` over the essential alphabet, for any integer `n`.
/// Negative `n` uses `B_{n delta + alpha0} = B_{(-n-1) delta + alpha1}`.
pub fn b_element(kind: BKind, n: i64) -> NcPoly {
    b_element_in(Alphabet::Ess, kind, n)
}

/// [`b_element`] written in any alphabet containing `W[0]` and `W[1]`.
pub fn b_element_in(alphabet: Alphabet, kind: BKind, n: i64) -> NcPoly {
    real(alphabet, false, kind, n)
}

/// `B_{n delta}` for `n >= 1` by the chosen formula.
pub fn b_delta_element(n: u32, formula: BDeltaFormula) -> NcPoly {
    b_delta_element_in(Alphabet::Ess, n, formula)
}

pub fn b_delta_element_in(alphabet: Alphabet, n: u32, formula: BDeltaFormula) -> NcPoly {
    imaginary(alphabet, false, n, formula)
}

/// Mirror family with `W[0]` and `W[1]` exchanged throughout; built by its
/// own recursion, over the mirrored essential alphabet.
pub fn tilde_b_element(kind: BKind, n: i64) -> NcPoly {
    tilde_b_element_in(Alphabet::EssSigma, kind, n)
}

pub fn tilde_b_element_in(alphabet: Alphabet, kind: BKind, n: i64) -> NcPoly {
    real(alphabet, true, kind, n)
}

pub fn tilde_b_delta() -> NcPoly {
    delta(Alphabet::EssSigma, true)
}

pub fn tilde_b_delta_element(n: u32, formula: BDeltaFormula) -> NcPoly {
    tilde_b_delta_element_in(Alphabet::EssSigma, n, formula)
}

pub fn tilde_b_delta_element_in(alphabet: Alphabet, n: u32, formula: BDeltaFormula) -> NcPoly {
    imaginary(alphabet, true, n, formula)
}

/// Degree in the length grading of `B_{n delta + alpha}`.
pub fn b_element_degree(n: i64) -> u32 {
    if n >= 0 {
        2 * n as u32 + 1
    } else {
        2 * (-n - 1) as u32 + 1
    }
}
