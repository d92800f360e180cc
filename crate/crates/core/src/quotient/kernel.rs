//! Fraction-free sparse elimination over `Z[q, q^-1]`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ring::{IntPoly, RationalFunction};

/// Integer Laurent polynomial `q^shift * p(q)` with `p(0) != 0` unless zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Lp {
    shift: i32,
    p: IntPoly,
}

impl Lp {
    pub fn new(shift: i32, p: IntPoly) -> Self {
        if p.is_zero() {
            return Lp { shift: 0, p };
        }
        let v = p.valuation();
        Lp { shift: shift + v as i32, p: p.shift_down(v) }
    }

    pub fn from_ratfunc(c: &RationalFunction) -> Option<Self> {
        if !c.int_den().is_one() {
            return None;
        }
        Some(Lp { shift: c.shift(), p: c.int_num().clone() })
    }

    /// `self / lead` as a canonical field element.
    pub fn ratio(&self, lead: &Lp) -> RationalFunction {
        RationalFunction::from_parts(self.shift - lead.shift, self.p.clone(), lead.p.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero()
    }

    /// True for `q^s`.
    pub fn is_unit_monomial(&self) -> bool {
        self.p.is_one()
    }

    pub fn mul(&self, o: &Lp) -> Lp {
        if o.p.is_one() {
            return Lp { shift: self.shift + o.shift, p: self.p.clone() };
        }
        Lp { shift: self.shift + o.shift, p: self.p.mul(&o.p) }
    }

    pub fn sub(&self, o: &Lp) -> Lp {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return Lp { shift: o.shift, p: o.p.neg() };
        }
        let s = self.shift.min(o.shift);
        let a = self.p.shift_up((self.shift - s) as usize);
        let b = o.p.shift_up((o.shift - s) as usize);
        Lp::new(s, a.sub(&b))
    }

    /// Gcd of the polynomial parts, as an element with shift 0.
    pub fn gcd(&self, o: &Lp) -> Lp {
        Lp { shift: 0, p: self.p.gcd(&o.p) }
    }

    pub fn div_exact(&self, g: &Lp) -> Lp {
        if g.p.is_one() {
            return Lp { shift: self.shift - g.shift, p: self.p.clone() };
        }
        Lp {
            shift: self.shift - g.shift,
            p: self.p.div_exact(&g.p).expect("exact division in elimination"),
        }
    }

    fn content(&self) -> BigInt {
        self.p.content()
    }

    fn lc_negative(&self) -> bool {
        self.p.lc().is_negative()
    }

    fn neg(&self) -> Lp {
        Lp { shift: self.shift, p: self.p.neg() }
    }
}

/// Sparse row: column index to nonzero coefficient.
pub(crate) type WorkRow = BTreeMap<u32, Lp>;

/// Stored pivot row, columns strictly descending; the first entry is the pivot.
#[derive(Clone, Debug)]
pub(crate) struct PivotRow {
    pub entries: Vec<(u32, Lp)>,
}

impl PivotRow {
    pub fn lead(&self) -> (u32, &Lp) {
        (self.entries[0].0, &self.entries[0].1)
    }
}

/// Triangular echelon basis built incrementally. Rows are kept primitive:
/// the gcd of all entries is a unit and the pivot has positive leading
/// coefficient and no power of `q`.
pub(crate) struct Echelon {
    pivots: Vec<Option<PivotRow>>,
    pub reductions: u64,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { pivots: vec![None; ncols], reductions: 0 }
    }

    pub fn pivot(&self, col: u32) -> Option<&PivotRow> {
        self.pivots[col as usize].as_ref()
    }

    pub fn pivot_cols(&self) -> impl Iterator<Item = u32> + '_ {
        self.pivots.iter().enumerate().filter(|(_, p)| p.is_some()).map(|(i, _)| i as u32)
    }

    pub fn rank(&self) -> usize {
        self.pivots.iter().filter(|p| p.is_some()).count()
    }

    /// `row <- (a/g) row - (b/g) pivot`, cancelling the entry at the pivot column.
    fn eliminate(row: &mut WorkRow, piv: &PivotRow, b: &Lp) {
        let (_, a) = piv.lead();
        let g = a.gcd(b);
        let af = a.div_exact(&g);
        let bf = b.div_exact(&g);
        if !(af.is_unit_monomial() && af.shift == 0) {
            for v in row.values_mut() {
                *v = v.mul(&af);
            }
        }
        for (c, v) in &piv.entries {
            let t = bf.mul(v);
            match row.get_mut(c) {
                Some(slot) => {
                    let r = slot.sub(&t);
                    if r.is_zero() {
                        row.remove(c);
                    } else {
                        *slot = r;
                    }
                }
                None => {
                    row.insert(*c, t.neg());
                }
            }
        }
    }

    /// Reduce the row's leading entries until the lead is not a pivot.
    fn reduce_lead(&mut self, row: &mut WorkRow) {
        while let Some((&m, b)) = row.last_key_value() {
            let Some(piv) = self.pivots[m as usize].as_ref() else { break };
            let b = b.clone();
            Self::eliminate(row, piv, &b);
            self.reductions += 1;
        }
    }

    /// Insert a row; returns the new pivot column if the row was independent.
    pub fn insert(&mut self, mut row: WorkRow) -> Option<u32> {
        self.reduce_lead(&mut row);
        let (&m, _) = row.last_key_value()?;
        let entries = normalize(row);
        self.pivots[m as usize] = Some(PivotRow { entries });
        Some(m)
    }

    /// Fully reduce the stored rows with pivot below `limit`, in ascending
    /// pivot order, so that no pivot column occurs in another such row.
    pub fn interreduce(&mut self, limit: u32) {
        for m in 0..limit.min(self.pivots.len() as u32) {
            let Some(piv) = self.pivots[m as usize].take() else { continue };
            let needs = piv.entries[1..].iter().any(|(c, _)| self.pivots[*c as usize].is_some());
            if !needs {
                self.pivots[m as usize] = Some(piv);
                continue;
            }
            let mut row: WorkRow = piv.entries.into_iter().collect();
            let cols: Vec<u32> = row.keys().copied().filter(|&c| c < m).rev().collect();
            for c in cols {
                let Some(other) = self.pivots[c as usize].as_ref() else { continue };
                let Some(b) = row.get(&c).cloned() else { continue };
                Self::eliminate(&mut row, other, &b);
                self.reductions += 1;
            }
            self.pivots[m as usize] = Some(PivotRow { entries: normalize(row) });
        }
    }
}

/// Strip content, fix the pivot sign and remove the pivot's power of `q`;
/// returns entries in descending column order.
fn normalize(row: WorkRow) -> Vec<(u32, Lp)> {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(&v.content());
        if g.is_one() {
            break;
        }
    }
    let mut poly_g = None;
    if row.len() > 1 {
        // Common polynomial factors beyond integers.
        let mut acc: Option<IntPoly> = None;
        for v in row.values() {
            let next = match &acc {
                None => v.p.primitive_part(),
                Some(a) => a.gcd(&v.p.primitive_part()),
            };
            let done = next.is_constant();
            acc = Some(next);
            if done {
                break;
            }
        }
        if let Some(a) = acc {
            if !a.is_constant() {
                poly_g = Some(a);
            }
        }
    } else {
        let v = row.values().next().unwrap();
        poly_g = Some(v.p.primitive_part()).filter(|p| !p.is_constant());
    }
    let (_, lead) = row.last_key_value().unwrap();
    let negate = lead.lc_negative();
    let lead_shift = lead.shift;
    let mut entries: Vec<(u32, Lp)> = row
        .into_iter()
        .rev()
        .map(|(c, mut v)| {
            if !g.is_one() {
                v.p = v.p.div_scalar_exact(&g);
            }
            if let Some(pg) = &poly_g {
                v.p = v.p.div_exact(pg).expect("common factor divides");
            }
            if negate {
                v.p = v.p.neg();
            }
            v.shift -= lead_shift;
            (c, v)
        })
        .collect();
    entries.shrink_to_fit();
    entries
}

/// Clear denominators of a field-coefficient row into an integer Laurent row.
pub(crate) fn clear_denominators<'a, I>(entries: I) -> WorkRow
where
    I: IntoIterator<Item = (u32, &'a RationalFunction)>,
{
    let entries: Vec<(u32, &RationalFunction)> = entries.into_iter().collect();
    let mut l = IntPoly::one();
    for (_, c) in &entries {
        let d = c.int_den();
        if !d.is_one() {
            let g = l.gcd(d);
            l = l.mul(&d.div_exact(&g).unwrap());
        }
    }
    let lr = RationalFunction::from_parts(0, l, IntPoly::one());
    entries
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(col, c)| (col, Lp::from_ratfunc(&(c * &lr)).expect("denominator cleared")))
        .collect()
}
