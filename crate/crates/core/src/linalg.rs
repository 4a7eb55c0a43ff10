//! Sparse exact linear algebra: an incremental echelon form over `ℚ(c)` and a
//! fraction-free nullspace over `ℤ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Rational, Scalar};

/// Sorted `(column, value)` pairs with no zero values.
pub type SparseVec = Vec<(usize, Scalar)>;

/// `a − s·b`.
pub fn sub_scaled(a: &[(usize, Scalar)], s: &Scalar, b: &[(usize, Scalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(s * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - &(s * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row echelon form built one vector at a time. Each stored row has leading
/// entry `1` at its pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces the leading entry of `v` until it is zero or lands on a
    /// column without a pivot.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        while let Some((lead, s)) = v.first().cloned() {
            match self.rows.get(&lead) {
                Some(row) => v = sub_scaled(&v, &s, row),
                None => break,
            }
        }
        v
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        let Some((lead, s)) = v.first().cloned() else {
            return false;
        };
        let inv = s.inv().expect("leading entry is nonzero");
        self.rows.insert(lead, v.into_iter().map(|(c, x)| (c, &x * &inv)).collect());
        true
    }

    /// The reduced row echelon form, rows ordered by pivot column.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let mut rows: Vec<(usize, SparseVec)> = self.rows.into_iter().collect();
        // Clear every pivot column above its pivot, working right to left.
        for k in (0..rows.len()).rev() {
            let (pivot, row) = rows[k].clone();
            for (_, other) in rows.iter_mut().take(k) {
                if let Ok(pos) = other.binary_search_by_key(&pivot, |e| e.0) {
                    let s = other[pos].1.clone();
                    *other = sub_scaled(other, &s, &row);
                }
            }
        }
        rows.into_iter().map(|(_, r)| r).collect()
    }
}

/// Rank of a set of sparse vectors.
pub fn rank(vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

type IntRow = Vec<(usize, BigInt)>;

/// Divides a row by the gcd of its entries and makes the leading entry positive.
fn make_primitive(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if row.first().is_some_and(|(_, x)| x.is_negative()) {
        g = -g;
    }
    if !g.is_one() && !g.is_zero() {
        for (_, x) in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// `p·a − q·b` with `p = b_lead/g`, `q = a_lead/g` eliminating column `col`.
fn eliminate(a: &IntRow, b: &IntRow, col: usize) -> IntRow {
    let av = &a[a.binary_search_by_key(&col, |e| e.0).expect("entry present")].1;
    let bv = &b[0].1;
    let g = av.gcd(bv);
    let (p, q) = (bv / &g, av / &g);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push((a[i].0, &p * &a[i].1));
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(&q * &b[j].1)));
            j += 1;
        } else {
            let v = &p * &a[i].1 - &q * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    make_primitive(&mut out);
    out
}

/// Scales a rational row by the lcm of its denominators.
fn integer_row(row: &[(usize, Rational)]) -> IntRow {
    let lcm = row.iter().fold(BigInt::one(), |acc, (_, q)| acc.lcm(&q.denom()));
    let mut out: IntRow = row
        .iter()
        .filter(|(_, q)| !q.is_zero())
        .map(|(c, q)| (*c, q.numer() * (&lcm / q.denom())))
        .collect();
    out.sort_by_key(|e| e.0);
    make_primitive(&mut out);
    out
}

/// Basis of `{v : Av = 0}` for a rational matrix given by its rows over
/// `ncols` columns. Elimination is fraction-free over `ℤ`; the result is in
/// reduced row echelon form with leading entries `1`.
pub fn nullspace(rows: &[Vec<(usize, Rational)>], ncols: usize) -> Vec<Vec<(usize, Rational)>> {
    let mut pivots: BTreeMap<usize, IntRow> = BTreeMap::new();
    for r in rows {
        let mut v = integer_row(r);
        while let Some(lead) = v.first().map(|e| e.0) {
            match pivots.get(&lead) {
                Some(p) => v = eliminate(&v, p, lead),
                None => {
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    // Back substitution: each pivot column is cleared from every other row.
    let keys: Vec<usize> = pivots.keys().copied().collect();
    for &p in keys.iter().rev() {
        let prow = pivots[&p].clone();
        for &q in keys.iter().filter(|&&q| q < p) {
            let row = &pivots[&q];
            if row.binary_search_by_key(&p, |e| e.0).is_ok() {
                let new = eliminate(row, &prow, p);
                pivots.insert(q, new);
            }
        }
    }
    let mut free_to_entries: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
    for (p, row) in &pivots {
        let lead = &row[0].1;
        for (c, x) in row.iter().skip(1) {
            let q = Rational::from_bigints(-x.clone(), lead.clone()).expect("nonzero pivot");
            free_to_entries.entry(*c).or_default().push((*p, q));
        }
    }
    let mut basis: Vec<SparseVec> = Vec::new();
    for f in (0..ncols).filter(|c| !pivots.contains_key(c)) {
        let mut v: Vec<(usize, Scalar)> = vec![(f, Scalar::one())];
        if let Some(es) = free_to_entries.get(&f) {
            v.extend(es.iter().map(|(c, q)| (*c, Scalar::from(q.clone()))));
        }
        v.sort_by_key(|e| e.0);
        basis.push(v);
    }
    let mut e = Echelon::new();
    for v in basis {
        e.insert(v);
    }
    e.into_rref()
        .into_iter()
        .map(|v| v.into_iter().map(|(c, s)| (c, s.as_rational().cloned().expect("rational matrix"))).collect())
        .collect()
}
