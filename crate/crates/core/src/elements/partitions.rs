use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::freealg::DegreeScheme;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionIndex {
    parts: Vec<u32>,
}

impl PartitionIndex {
    /// Sorts the parts into weakly decreasing order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        PartitionIndex { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for PartitionIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `n`, in reverse lexicographic order: `(n)` first,
/// `(1,...,1)` last.
pub fn partitions(n: u32) -> Vec<PartitionIndex> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<PartitionIndex>) {
        if rem == 0 {
            out.push(PartitionIndex { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of PBW generators of degree `j` under `scheme`.
fn generators_of_degree(scheme: DegreeScheme, j: u32) -> u64 {
    match scheme {
        DegreeScheme::AltDeg | DegreeScheme::EssDeg => 2,
        // Root vectors of the two-generator algebra: two in each odd
        // degree, one in each even degree.
        DegreeScheme::LenDeg => {
            if j % 2 == 1 {
                2
            } else {
                1
            }
        }
        DegreeScheme::ZDeg => 1,
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of ordered PBW monomials of degree exactly `d`: a sum over
/// partitions of `d` of the number of ways to colour each part by one of the
/// generators of that degree, counted as multisets.
pub fn pbw_level_count(scheme: DegreeScheme, d: u32) -> u64 {
    let total: BigUint = partitions(d)
        .iter()
        .map(|lambda| {
            lambda
                .multiplicities()
                .into_iter()
                .map(|(part, m)| {
                    let g = generators_of_degree(scheme, part);
                    binomial(g + m as u64 - 1, m as u64)
                })
                .product::<BigUint>()
        })
        .sum();
    total.to_u64().expect("count fits in u64")
}

/// Number of ordered PBW monomials of degree at most `d`.
pub fn pbw_count(scheme: DegreeScheme, d: u32) -> u64 {
    (0..=d).map(|m| pbw_level_count(scheme, m)).sum()
}
