//! Derived elements: alternating generators written in essential ones, the
//! root-vector analogs, closed forms built from them, partitions, and the
//! named morphisms.

mod bseries;
mod morphisms;
mod partitions;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub use bseries::{
    b_delta, b_delta_element, b_delta_element_in, b_element, b_element_degree, b_element_in, tilde_b_delta,
    tilde_b_delta_element, tilde_b_delta_element_in, tilde_b_element, tilde_b_element_in, BDeltaFormula, BKind,
};
pub use morphisms::NamedMorphism;
pub use partitions::{partitions, pbw_count, pbw_level_count, PartitionIndex};

use crate::freealg::{commutator, q_commutator, Alphabet, Generator, NcPoly};
use crate::ring::{consts, RationalFunction};

fn ess(g: Generator) -> NcPoly {
    NcPoly::gen(Alphabet::Ess, g)
}

/// `Gt[k]` over the essential alphabet; `k = 0` is the scalar constant.
pub fn ess_gt(k: u32) -> NcPoly {
    if k == 0 {
        NcPoly::scalar(Alphabet::Ess, consts::gg0())
    } else {
        ess(Generator::gt(k))
    }
}

/// `W[n]` expressed in `W[0]`, `W[1]` and the `Gt[k]`.
///
/// Writing `k = -n` for `n <= 0` and `k = n - 1` for `n >= 1`, the result is
/// the starting letter (`W[1]` for odd `n`, `W[0]` for even `n`) minus `k`
/// q-commutators divided by `(q^2-q^-2)^2`, alternating between
/// `[Gt[m], W[0]]_q` and `[W[1], Gt[m]]_q` for `m = 1..=k`.
pub fn essential_w(n: i64) -> NcPoly {
    let k = if n <= 0 { (-n) as u32 } else { (n - 1) as u32 };
    let w0 = ess(Generator::W0);
    let w1 = ess(Generator::W1);
    let odd_n = n.rem_euclid(2) == 1;
    let mut out = if odd_n { w1.clone() } else { w0.clone() };
    let inv_c = consts::inv(&consts::qdg());
    for m in 1..=k {
        let g = ess_gt(m);
        // Odd n pairs odd m with [Gt, W0]_q; even n pairs odd m with [W1, Gt]_q.
        let left = (m % 2 == 1) == odd_n;
        let br = if left { q_commutator(&g, &w0) } else { q_commutator(&w1, &g) };
        out = out - br.expect("same alphabet").scale(&inv_c);
    }
    out
}

/// `G[k]` expressed over the essential alphabet: `Gt[k] + [2]_q [W[1], W[1-k]]`
/// with the `W` expanded by [`essential_w`]. Index 0 gives the scalar.
pub fn essential_g(k: u32) -> NcPoly {
    if k == 0 {
        return ess_gt(0);
    }
    let w1 = ess(Generator::W1);
    let br = commutator(&w1, &essential_w(1 - k as i64)).expect("same alphabet");
    ess_gt(k) + br.scale(&consts::qint(2))
}

/// `W[n]` over the mirrored essential alphabet: the mirror image of
/// `essential_w(1 - n)`.
pub fn essential_w_sigma(n: i64) -> NcPoly {
    NamedMorphism::SigmaEss.apply(&essential_w(1 - n)).expect("mirror map is total")
}

/// `Gt[k]` over the mirrored essential alphabet (mirror image of `essential_g`).
pub fn essential_gt_sigma(k: u32) -> NcPoly {
    NamedMorphism::SigmaEss.apply(&essential_g(k)).expect("mirror map is total")
}

/// `G[k]` over the mirrored essential alphabet; `k = 0` is the scalar.
pub fn sigma_g(k: u32) -> NcPoly {
    if k == 0 {
        NcPoly::scalar(Alphabet::EssSigma, consts::gg0())
    } else {
        NcPoly::gen(Alphabet::EssSigma, Generator::g(k))
    }
}

/// The eight double-sum closed forms for `W[-n]` and `W[n+1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClosedFormVariant {
    /// `W[-n]`, root vectors on the left.
    WWaltMinus,
    /// `W[n+1]`, root vectors on the left.
    WWaltPlus,
    /// `W[-n]`, root vectors on the right.
    WWaltaMinus,
    /// `W[n+1]`, root vectors on the right.
    WWaltaPlus,
    /// Mirror of `WWaltPlus`: `W[-n]` from tilde vectors and `G`, left.
    SigmaMinus,
    /// Mirror of `WWaltMinus`: `W[n+1]`, left.
    SigmaPlus,
    /// Mirror of `WWaltaPlus`: `W[-n]`, right.
    SigmaAMinus,
    /// Mirror of `WWaltaMinus`: `W[n+1]`, right.
    SigmaAPlus,
}

impl ClosedFormVariant {
    pub const ALL: [ClosedFormVariant; 8] = [
        ClosedFormVariant::WWaltMinus,
        ClosedFormVariant::WWaltPlus,
        ClosedFormVariant::WWaltaMinus,
        ClosedFormVariant::WWaltaPlus,
        ClosedFormVariant::SigmaMinus,
        ClosedFormVariant::SigmaPlus,
        ClosedFormVariant::SigmaAMinus,
        ClosedFormVariant::SigmaAPlus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedFormVariant::WWaltMinus => "WWalt_minus",
            ClosedFormVariant::WWaltPlus => "WWalt_plus",
            ClosedFormVariant::WWaltaMinus => "WWalta_minus",
            ClosedFormVariant::WWaltaPlus => "WWalta_plus",
            ClosedFormVariant::SigmaMinus => "sigma_minus",
            ClosedFormVariant::SigmaPlus => "sigma_plus",
            ClosedFormVariant::SigmaAMinus => "sigma_a_minus",
            ClosedFormVariant::SigmaAPlus => "sigma_a_plus",
        }
    }

    pub fn is_sigma(self) -> bool {
        matches!(
            self,
            ClosedFormVariant::SigmaMinus
                | ClosedFormVariant::SigmaPlus
                | ClosedFormVariant::SigmaAMinus
                | ClosedFormVariant::SigmaAPlus
        )
    }

    /// Alphabet the closed form is written in.
    pub fn alphabet(self) -> Alphabet {
        if self.is_sigma() {
            Alphabet::EssSigma
        } else {
            Alphabet::Ess
        }
    }

    /// True when the closed form computes `W[-n]` (else `W[n+1]`).
    pub fn is_minus(self) -> bool {
        matches!(
            self,
            ClosedFormVariant::WWaltMinus
                | ClosedFormVariant::WWaltaMinus
                | ClosedFormVariant::SigmaMinus
                | ClosedFormVariant::SigmaAMinus
        )
    }

    /// Subscript of the `W` the closed form equals.
    pub fn target_index(self, n: u32) -> i64 {
        if self.is_minus() {
            -(n as i64)
        } else {
            n as i64 + 1
        }
    }

    /// The `W` the closed form equals, written in the variant's alphabet.
    pub fn target(self, n: u32) -> NcPoly {
        let m = self.target_index(n);
        if self.is_sigma() {
            essential_w_sigma(m)
        } else {
            essential_w(m)
        }
    }

    /// (root-vector kind, q-exponent sign relative to `k - 2l`, root vectors on the left).
    fn shape(self) -> (BKind, i32, bool) {
        use ClosedFormVariant::*;
        match self {
            WWaltMinus => (BKind::Alpha0, 1, true),
            WWaltPlus => (BKind::Alpha1, -1, true),
            WWaltaMinus => (BKind::Alpha0, -1, false),
            WWaltaPlus => (BKind::Alpha1, 1, false),
            SigmaPlus => (BKind::Alpha0, 1, true),
            SigmaMinus => (BKind::Alpha1, -1, true),
            SigmaAPlus => (BKind::Alpha0, -1, false),
            SigmaAMinus => (BKind::Alpha1, 1, false),
        }
    }
}

impl fmt::Display for ClosedFormVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosedFormVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        ClosedFormVariant::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown closed-form variant '{s}'"))
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `-(q-q^-1)^-1 sum_{k=0}^n sum_{l=0}^k C(k,l) q^{±(k-2l)} [2]_q^{-k-2}`
/// times a root vector `B_{(k-2l) delta + alpha}` and `Gt[n-k]` (or `G[n-k]`
/// with tilde vectors for the mirrored variants), in the variant's order.
pub fn w_closed_form(n: u32, variant: ClosedFormVariant) -> NcPoly {
    let (kind, sign, b_left) = variant.shape();
    let alphabet = variant.alphabet();
    let two = consts::qint(2);
    let inv_two = consts::inv(&two);
    let prefactor = -consts::inv(&consts::q_minus_qinv());
    let mut out = NcPoly::zero(alphabet);
    for k in 0..=n {
        let g = if variant.is_sigma() { sigma_g(n - k) } else { ess_gt(n - k) };
        let mut pow_two = RationalFunction::one();
        for _ in 0..k + 2 {
            pow_two = pow_two * &inv_two;
        }
        for l in 0..=k {
            let e = k as i64 - 2 * l as i64;
            let b = if variant.is_sigma() {
                tilde_b_element_in(alphabet, kind, e)
            } else {
                b_element_in(alphabet, kind, e)
            };
            let coeff = RationalFunction::from_bigint(binomial(k, l))
                * consts::q(sign * e as i32)
                * &pow_two
                * &prefactor;
            let term = if b_left { &b * &g } else { &g * &b };
            out = out + term.scale(&coeff);
        }
    }
    out
}

/// Degree bound of [`w_closed_form`] under the essential grading.
pub fn w_closed_form_degree(n: u32) -> u32 {
    2 * n + 1
}
