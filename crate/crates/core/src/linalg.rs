//! Row echelon forms over F_p with sparse rows.

use std::collections::BTreeMap;

use crate::ring::PrimeField;

/// Sparse vector: `(column, value)` pairs with strictly increasing columns
/// and nonzero values.
pub type SparseRow = Vec<(usize, u32)>;

/// Incrementally built row echelon form. Each stored row is monic at its
/// pivot column and has no entries left of it.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: PrimeField,
    pivots: BTreeMap<usize, SparseRow>,
}

/// `a - c * b`, both sparse.
fn axpy(a: &[(usize, u32)], c: u32, b: &[(usize, u32)], field: PrimeField) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, field.neg(field.mul(c, b[j].1))));
            j += 1;
        } else {
            let v = field.sub(a[i].1, field.mul(c, b[j].1));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Echelon {
    pub fn new(field: PrimeField) -> Self {
        Echelon { field, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored pivots; returns the remainder.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut start = 0;
        while start < row.len() {
            let (col, val) = row[start];
            match self.pivots.get(&col) {
                Some(piv) => {
                    let rest = axpy(&row[start..], val, piv, self.field);
                    row.truncate(start);
                    row.extend(rest);
                }
                None => start += 1,
            }
        }
        row
    }

    /// Adds `row`; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row: SparseRow = row.into_iter().filter(|(_, v)| *v != 0).collect();
        let mut row = self.reduce_leading(row);
        if row.is_empty() {
            return false;
        }
        let inv = self.field.inv(row[0].1);
        for (_, v) in row.iter_mut() {
            *v = self.field.mul(*v, inv);
        }
        self.pivots.insert(row[0].0, row);
        true
    }

    fn reduce_leading(&self, mut row: SparseRow) -> SparseRow {
        while let Some(&(col, val)) = row.first() {
            match self.pivots.get(&col) {
                Some(piv) => row = axpy(&row, val, piv, self.field),
                None => break,
            }
        }
        row
    }

    /// Basis of the right kernel `{v : A v = 0}` of the matrix whose rows were
    /// inserted, as dense vectors of length `ncols`.
    pub fn kernel_basis(&self, ncols: usize) -> Vec<Vec<u32>> {
        let field = self.field;
        // back-substitute into reduced row echelon form, highest pivot first
        let mut reduced: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (&col, row) in self.pivots.iter().rev() {
            let mut r = row.clone();
            let mut k = 1;
            while k < r.len() {
                let (c, v) = r[k];
                if let Some(piv) = reduced.get(&c) {
                    let rest = axpy(&r[k..], v, piv, field);
                    r.truncate(k);
                    r.extend(rest);
                } else {
                    k += 1;
                }
            }
            reduced.insert(col, r);
        }
        let mut out = Vec::new();
        for free in (0..ncols).filter(|c| !reduced.contains_key(c)) {
            let mut v = vec![0u32; ncols];
            v[free] = 1;
            for (&pc, row) in &reduced {
                if let Ok(pos) = row.binary_search_by_key(&free, |(c, _)| *c) {
                    v[pc] = field.neg(row[pos].1);
                }
            }
            out.push(v);
        }
        out
    }
}

/// Rank of the given sparse rows.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>, field: PrimeField) -> usize {
    let mut e = Echelon::new(field);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

pub fn dense_to_sparse(v: &[u32]) -> SparseRow {
    v.iter().enumerate().filter(|(_, x)| **x != 0).map(|(i, x)| (i, *x)).collect()
}
