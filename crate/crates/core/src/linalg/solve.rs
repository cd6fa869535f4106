//! Exact solution of homogeneous linear systems.
//!
//! Equations are reduced incrementally into semi-echelon form: every stored
//! row has a distinct leading column, normalized to 1. The kernel basis is
//! indexed by the non-pivot ("free") columns in increasing order, each basis
//! vector having a 1 at its free column and 0 at the other free columns.
//! The pivot of a row is always its first nonzero column, so the basis is a
//! deterministic function of the system.

use crate::linalg::matrix::{LinearMap, SparseVec};
use crate::linalg::scalar::{Field, Scalar};

pub struct LinearSystem {
    field: Field,
    unknowns: usize,
    pivots: Vec<Option<SparseVec>>,
    rank: usize,
}

impl LinearSystem {
    pub fn new(field: Field, unknowns: usize) -> Self {
        LinearSystem { field, unknowns, pivots: vec![None; unknowns], rank: 0 }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Adds the equation `Σ c_i x_i = 0`. The row may be unsorted and may
    /// repeat indices.
    pub fn add_equation(&mut self, row: SparseVec) {
        if self.rank == self.unknowns {
            return;
        }
        let mut row = super::matrix::normalize(row);
        while let Some((lead, coeff)) = row.first().cloned() {
            match &self.pivots[lead] {
                Some(pivot) => row = axpy(&row, &-&coeff, pivot),
                None => {
                    let inv = coeff.inverse().expect("nonzero leading entry");
                    for (_, v) in &mut row {
                        *v = &*v * &inv;
                    }
                    self.pivots[lead] = Some(row);
                    self.rank += 1;
                    return;
                }
            }
        }
    }

    /// Adds every row of `m` (as equations in the columns of `m`).
    pub fn add_rows(&mut self, m: &LinearMap) {
        assert_eq!(m.cols(), self.unknowns, "equation width");
        for row in m.transpose().columns_owned() {
            self.add_equation(row);
        }
    }

    pub fn solve(&self) -> SolutionSpace {
        let free: Vec<usize> = (0..self.unknowns).filter(|&c| self.pivots[c].is_none()).collect();
        let pivot_cols: Vec<usize> =
            (0..self.unknowns).rev().filter(|&c| self.pivots[c].is_some()).collect();
        let zero = self.field.zero();
        let mut x = vec![zero.clone(); self.unknowns];
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            x[f] = self.field.one();
            // Only columns above f can become nonzero.
            for &p in pivot_cols.iter().filter(|&&p| p < f) {
                let row = self.pivots[p].as_ref().expect("pivot");
                let mut acc = zero.clone();
                for (c, v) in &row[1..] {
                    if !x[*c].is_zero() {
                        acc.add_product(v, &x[*c]);
                    }
                }
                x[p] = -acc;
            }
            let mut vec = SparseVec::new();
            for (c, v) in x.iter_mut().enumerate().take(f + 1) {
                if !v.is_zero() {
                    vec.push((c, std::mem::replace(v, zero.clone())));
                }
            }
            basis.push(vec);
        }
        SolutionSpace { field: self.field, unknowns: self.unknowns, free, basis }
    }
}

/// `a + s·b` for sorted sparse vectors.
fn axpy(a: &[(usize, Scalar)], s: &Scalar, b: &[(usize, Scalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, s * &b[j].1));
            j += 1;
        } else {
            let mut v = a[i].1.clone();
            v.add_product(s, &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// A basis of the solution space of a homogeneous system.
#[derive(Clone, Debug)]
pub struct SolutionSpace {
    pub field: Field,
    pub unknowns: usize,
    /// The free column attached to each basis vector.
    pub free: Vec<usize>,
    pub basis: Vec<SparseVec>,
}

impl SolutionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The basis vectors as the columns of an `unknowns × dim` matrix.
    pub fn as_matrix(&self) -> LinearMap {
        LinearMap::from_columns(self.field, self.unknowns, self.basis.clone()).expect("in range")
    }
}
