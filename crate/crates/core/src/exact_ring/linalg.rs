//! Sparse row reduction over a [`Field`].
//!
//! Columns are indexed so that column 0 is the largest monomial; pivots are
//! then leading monomials and non-pivot columns are standard monomials.

use super::field::Field;

/// Sparse row: `(column, value)` sorted by column, no zero values.
pub type SparseRow<F> = Vec<(usize, F)>;

pub fn sparse_from_dense<F: Field>(dense: &[F]) -> SparseRow<F> {
    dense.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect()
}

fn axpy<F: Field>(row: &SparseRow<F>, factor: &F, pivot: &SparseRow<F>) -> SparseRow<F> {
    // row - factor * pivot
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        match (row.get(i), pivot.get(j)) {
            (Some((ci, vi)), Some((cj, vj))) if ci == cj => {
                let v = vi.sub(&factor.mul(vj));
                if !v.is_zero() {
                    out.push((*ci, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ci, vi)), Some((cj, _))) if ci < cj => {
                out.push((*ci, vi.clone()));
                i += 1;
            }
            (Some((ci, vi)), None) => {
                out.push((*ci, vi.clone()));
                i += 1;
            }
            (_, Some((cj, vj))) => {
                out.push((*cj, factor.mul(vj).neg()));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Incrementally built row echelon form. Pivot rows are monic in their
/// leading column.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    ncols: usize,
    /// pivot column -> row index in `rows`
    pivot_of_col: Vec<Option<usize>>,
    rows: Vec<SparseRow<F>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, pivot_of_col: vec![None; ncols], rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_of_col[col].is_some()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.is_pivot(c)).collect()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| !self.is_pivot(c)).collect()
    }

    /// Eliminates every pivot column from `row`. The remainder is unique
    /// because pivots are processed in increasing column order and a pivot
    /// row has no entries left of its pivot.
    pub fn reduce(&self, mut row: SparseRow<F>) -> SparseRow<F> {
        let mut k = 0;
        while k < row.len() {
            let (col, val) = (row[k].0, row[k].1.clone());
            if let Some(p) = self.pivot_of_col[col] {
                row = axpy(&row, &val, &self.rows[p]);
                // entries before k are untouched
            } else {
                k += 1;
            }
        }
        row
    }

    /// Inserts a row; returns true when the rank grew.
    pub fn insert(&mut self, row: SparseRow<F>) -> bool {
        let r = self.reduce(row);
        if r.is_empty() {
            return false;
        }
        let lead = r[0].1.clone();
        let r: SparseRow<F> = if lead == F::one() {
            r
        } else {
            let inv = F::one().div(&lead);
            r.into_iter().map(|(c, v)| (c, v.mul(&inv))).collect()
        };
        self.pivot_of_col[r[0].0] = Some(self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn contains(&self, row: SparseRow<F>) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Rank of a dense matrix given by rows.
pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(sparse_from_dense(r));
    }
    ech.rank()
}

/// Rank of a matrix given as columns (same as the rank of its transpose).
pub fn rank_of_columns<F: Field>(cols: &[SparseRow<F>], nrows: usize) -> usize {
    let mut ech = Echelon::new(nrows);
    for c in cols {
        ech.insert(c.clone());
    }
    ech.rank()
}
