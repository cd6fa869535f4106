//! Linear maps between finite-dimensional coordinate spaces.
//!
//! # Tensor basis convention
//!
//! The basis of `V ⊗ W` is ordered lexicographically with the left factor
//! most significant: `e_i ⊗ f_j` has index `i * dim W + j`. Every tensor
//! space in the crate, and every structure map built from Sweedler-style
//! formulas, follows this single convention. [`LinearMap::kronecker`],
//! [`LinearMap::flip`] and [`LinearMap::permute_factors`] implement it.
//!
//! Maps are stored column-wise with explicit zeros dropped. The storage is
//! an implementation detail: the semantics are those of a dense
//! `rows × cols` grid and entries are read with [`LinearMap::get`].

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::scalar::{Field, Scalar};
use crate::linalg::solve::{LinearSystem, SolutionSpace};

/// A sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// A matrix over a [`Field`] with `rows` = target dimension and
/// `cols` = source dimension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    field: Field,
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl LinearMap {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        LinearMap { field, rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let one = field.one();
        LinearMap {
            field,
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![(i, one.clone())]).collect(),
        }
    }

    /// Builds from row-major dense data.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::new();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::Shape {
                    context: "dense matrix rows".into(),
                    expected_rows: r,
                    expected_cols: c,
                    rows: r,
                    cols: row.len(),
                });
            }
            for (j, s) in row.into_iter().enumerate() {
                entries.push((i, j, s));
            }
        }
        Self::from_entries(field, r, c, entries)
    }

    /// Convenience constructor from small integers (row-major).
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Self {
        let dense = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, dense).expect("rectangular integer matrix")
    }

    /// Builds from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_entries(
        field: Field,
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut columns: Vec<SparseVec> = vec![Vec::new(); cols];
        for (r, c, s) in entries {
            if r >= rows || c >= cols {
                return Err(Error::Shape {
                    context: format!("entry ({r}, {c})"),
                    expected_rows: rows,
                    expected_cols: cols,
                    rows: r + 1,
                    cols: c + 1,
                });
            }
            if s.field() != field {
                return Err(Error::FieldMismatch(format!(
                    "entry over {} in a map over {field}",
                    s.field()
                )));
            }
            columns[c].push((r, s));
        }
        for col in &mut columns {
            *col = normalize(std::mem::take(col));
        }
        Ok(LinearMap { field, rows, cols, columns })
    }

    /// Builds column by column from images of basis vectors.
    pub fn from_columns(field: Field, rows: usize, columns: Vec<SparseVec>) -> Result<Self> {
        let cols = columns.len();
        Self::from_entries(
            field,
            rows,
            cols,
            columns
                .into_iter()
                .enumerate()
                .flat_map(|(c, col)| col.into_iter().map(move |(r, s)| (r, c, s))),
        )
    }

    /// A row vector `1 × n`.
    pub fn row_vector(field: Field, entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        Self::from_entries(field, 1, n, entries.into_iter().enumerate().map(|(c, s)| (0, c, s)))
            .expect("in range")
    }

    /// A column vector `n × 1`.
    pub fn column_vector(field: Field, entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        Self::from_entries(field, n, 1, entries.into_iter().enumerate().map(|(r, s)| (r, 0, s)))
            .expect("in range")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn columns_owned(self) -> Vec<SparseVec> {
        self.columns
    }

    pub fn column(&self, c: usize) -> &[(usize, Scalar)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        let col = &self.columns[c];
        match col.binary_search_by_key(&r, |(i, _)| *i) {
            Ok(k) => col[k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    /// All nonzero entries in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, s)| (*r, c, s)))
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![self.field.zero(); self.cols]; self.rows];
        for (r, c, s) in self.entries() {
            out[r][c] = s.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .columns
                .iter()
                .enumerate()
                .all(|(c, col)| col.len() == 1 && col[0].0 == c && col[0].1.is_one())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinearMap) -> Result<LinearMap> {
        if self.cols != g.rows {
            return Err(Error::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: g.rows,
                right_cols: g.cols,
            });
        }
        self.same_field(g)?;
        let mut acc = Accumulator::new(self.field, self.rows);
        let columns = g
            .columns
            .iter()
            .map(|gcol| {
                for (k, gkj) in gcol {
                    for (i, fik) in &self.columns[*k] {
                        acc.add_product(*i, fik, gkj);
                    }
                }
                acc.drain()
            })
            .collect();
        Ok(LinearMap { field: self.field, rows: self.rows, cols: g.cols, columns })
    }

    /// Composes a chain right-to-left: `chain(&[f, g, h]) = f ∘ g ∘ h`.
    pub fn chain(maps: &[&LinearMap]) -> Result<LinearMap> {
        let (last, rest) = maps.split_last().expect("nonempty chain");
        rest.iter().rev().try_fold((*last).clone(), |acc, f| f.compose(&acc))
    }

    /// Applies the map to a sparse vector.
    pub fn apply(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = Accumulator::new(self.field, self.rows);
        for (k, vk) in v {
            for (i, fik) in &self.columns[*k] {
                acc.add_product(*i, fik, vk);
            }
        }
        acc.drain()
    }

    /// `self ⊗ g` under the global basis convention.
    pub fn kronecker(&self, g: &LinearMap) -> LinearMap {
        assert_eq!(self.field, g.field, "kronecker across fields");
        let rows = self.rows * g.rows;
        let cols = self.cols * g.cols;
        let mut columns = Vec::with_capacity(cols);
        for fcol in &self.columns {
            for gcol in &g.columns {
                let mut col = Vec::with_capacity(fcol.len() * gcol.len());
                for (i1, a) in fcol {
                    for (i2, b) in gcol {
                        col.push((i1 * g.rows + i2, a * b));
                    }
                }
                columns.push(col);
            }
        }
        LinearMap { field: self.field, rows, cols, columns }
    }

    /// Kronecker product of several maps, left to right.
    pub fn kron_all(maps: &[&LinearMap]) -> LinearMap {
        let (first, rest) = maps.split_first().expect("nonempty");
        rest.iter().fold((*first).clone(), |acc, m| acc.kronecker(m))
    }

    /// The symmetric braiding `τ: V⊗W → W⊗V`, `e_i⊗e_j ↦ e_j⊗e_i`, for
    /// `dim V = m`, `dim W = n`.
    pub fn flip(field: Field, m: usize, n: usize) -> LinearMap {
        Self::permute_factors(field, &[m, n], &[1, 0])
    }

    /// Reorders tensor factors: maps `V_0 ⊗ … ⊗ V_{k-1}` (dims `dims`) to
    /// `V_{order[0]} ⊗ … ⊗ V_{order[k-1]}`.
    pub fn permute_factors(field: Field, dims: &[usize], order: &[usize]) -> LinearMap {
        assert_eq!(dims.len(), order.len());
        let total: usize = dims.iter().product();
        let out_dims: Vec<usize> = order.iter().map(|&k| dims[k]).collect();
        let one = field.one();
        let mut columns = Vec::with_capacity(total);
        let mut idx = vec![0usize; dims.len()];
        for _ in 0..total {
            let mut target = 0;
            for (pos, &k) in order.iter().enumerate() {
                target = target * out_dims[pos] + idx[k];
            }
            columns.push(vec![(target, one.clone())]);
            for k in (0..dims.len()).rev() {
                idx[k] += 1;
                if idx[k] < dims[k] {
                    break;
                }
                idx[k] = 0;
            }
        }
        LinearMap { field, rows: total, cols: total, columns }
    }

    pub fn transpose(&self) -> LinearMap {
        let mut columns: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, s) in col {
                columns[*r].push((c, s.clone()));
            }
        }
        LinearMap { field: self.field, rows: self.cols, cols: self.rows, columns }
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.combine(other, true)
    }

    fn combine(&self, other: &LinearMap, negate: bool) -> Result<LinearMap> {
        if self.shape() != other.shape() {
            return Err(Error::Shape {
                context: "matrix sum".into(),
                expected_rows: self.rows,
                expected_cols: self.cols,
                rows: other.rows,
                cols: other.cols,
            });
        }
        self.same_field(other)?;
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                let mut merged: SparseVec = a.clone();
                merged.extend(b.iter().map(|(i, s)| (*i, if negate { -s } else { s.clone() })));
                normalize(merged)
            })
            .collect();
        Ok(LinearMap { field: self.field, rows: self.rows, cols: self.cols, columns })
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        let columns = self
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(i, v)| (*i, v * s))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        LinearMap { field: self.field, rows: self.rows, cols: self.cols, columns }
    }

    /// `self^k` for square maps.
    pub fn power(&self, k: u32) -> LinearMap {
        assert_eq!(self.rows, self.cols, "power of a non-square map");
        (0..k).fold(LinearMap::identity(self.field, self.rows), |acc, _| {
            self.compose(&acc).expect("square")
        })
    }

    /// Rank by exact elimination.
    pub fn rank(&self) -> usize {
        let mut system = LinearSystem::new(self.field, self.cols);
        for row in self.transpose().columns {
            system.add_equation(row);
        }
        system.rank()
    }

    /// Basis of `{v : self·v = 0}`.
    pub fn kernel(&self) -> SolutionSpace {
        let mut system = LinearSystem::new(self.field, self.cols);
        for row in self.transpose().columns {
            system.add_equation(row);
        }
        system.solve()
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<LinearMap> {
        if self.rows != self.cols {
            return Err(Error::NotInvertible(format!("{}x{} map", self.rows, self.cols)));
        }
        let n = self.rows;
        // Rows of [A | I] as sparse vectors over 2n columns.
        let mut rows: Vec<SparseVec> = self
            .transpose()
            .columns
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r.push((n + i, self.field.one()));
                r
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| rows[r].first().is_some_and(|(c, _)| *c == col))
                .ok_or_else(|| Error::NotInvertible("matrix".into()))?;
            rows.swap(col, pivot);
            let inv = rows[col][0].1.inverse().expect("nonzero pivot");
            rows[col] = rows[col].iter().map(|(c, v)| (*c, v * &inv)).collect();
            let pivot_row = rows[col].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == col {
                    continue;
                }
                let factor = match row.binary_search_by_key(&col, |(c, _)| *c) {
                    Ok(k) => row[k].1.clone(),
                    Err(_) => continue,
                };
                let mut merged = std::mem::take(row);
                merged.extend(pivot_row.iter().map(|(c, v)| (*c, -&(v * &factor))));
                *row = normalize(merged);
            }
        }
        let entries = rows.into_iter().enumerate().flat_map(|(r, row)| {
            row.into_iter().filter(|(c, _)| *c >= n).map(move |(c, v)| (r, c - n, v))
        });
        LinearMap::from_entries(self.field, n, n, entries)
    }

    /// The first entry (column-major) where the two maps differ, as
    /// `(row, col, self_value, other_value)`.
    pub fn first_difference(&self, other: &LinearMap) -> Option<(usize, usize, Scalar, Scalar)> {
        if self.shape() != other.shape() {
            return Some((self.rows, self.cols, self.field.zero(), self.field.zero()));
        }
        for c in 0..self.cols {
            let (a, b) = (&self.columns[c], &other.columns[c]);
            if a == b {
                continue;
            }
            let rows_touched = a.iter().chain(b.iter()).map(|(r, _)| *r);
            let r = rows_touched
                .filter(|&r| self.get(r, c) != other.get(r, c))
                .min()
                .expect("columns differ");
            return Some((r, c, self.get(r, c), other.get(r, c)));
        }
        None
    }

    fn same_field(&self, other: &LinearMap) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, other.field)));
        }
        Ok(())
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap {}x{} over {}", self.rows, self.cols, self.field)?;
        if self.rows * self.cols <= 256 {
            for row in self.to_dense() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(f, "  [{}]", cells.join(", "))?;
            }
        } else {
            writeln!(f, "  ({} nonzero entries)", self.nnz())?;
        }
        Ok(())
    }
}

/// Sorts by index, sums duplicates, drops zeros.
pub(crate) fn normalize(mut v: SparseVec) -> SparseVec {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, s) in v {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc = &*acc + &s,
            _ => out.push((i, s)),
        }
    }
    out.retain(|(_, s)| !s.is_zero());
    out
}

/// Dense scratch accumulator reused across columns.
pub(crate) struct Accumulator {
    values: Vec<Scalar>,
    touched: Vec<usize>,
    marked: Vec<bool>,
    zero: Scalar,
}

impl Accumulator {
    pub(crate) fn new(field: Field, len: usize) -> Self {
        Accumulator {
            values: vec![field.zero(); len],
            touched: Vec::new(),
            marked: vec![false; len],
            zero: field.zero(),
        }
    }

    pub(crate) fn add_product(&mut self, i: usize, a: &Scalar, b: &Scalar) {
        if !self.marked[i] {
            self.marked[i] = true;
            self.touched.push(i);
        }
        self.values[i].add_product(a, b);
    }

    pub(crate) fn drain(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.marked[i] = false;
            let v = std::mem::replace(&mut self.values[i], self.zero.clone());
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rational;

    fn naive_product(f: &LinearMap, g: &LinearMap) -> LinearMap {
        let (a, b) = (f.to_dense(), g.to_dense());
        let mut out = vec![vec![f.field().zero(); g.cols()]; f.rows()];
        for i in 0..f.rows() {
            for j in 0..g.cols() {
                for k in 0..f.cols() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
        LinearMap::from_rows(f.field(), out).unwrap()
    }

    fn small_map(rows: usize, cols: usize) -> impl Strategy<Value = LinearMap> {
        proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
            let dense = v.chunks(cols).map(|r| r.iter().map(|&x| Q.from_i64(x)).collect()).collect();
            LinearMap::from_rows(Q, dense).unwrap()
        })
    }

    #[test]
    fn identity_is_neutral() {
        let id = LinearMap::identity(Q, 3);
        assert_eq!(id.compose(&id).unwrap(), id);
    }

    #[test]
    fn composition_over_gf5() {
        let f5 = Field::Prime(5);
        let f = LinearMap::from_ints(f5, &[&[2]]);
        let g = LinearMap::from_ints(f5, &[&[3]]);
        assert_eq!(f.compose(&g).unwrap(), LinearMap::from_ints(f5, &[&[1]]));
    }

    #[test]
    fn composition_checks_inner_dimensions() {
        let f = LinearMap::zero(Q, 2, 3);
        let g = LinearMap::zero(Q, 2, 2);
        let err = f.compose(&g).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionMismatch { left_rows: 2, left_cols: 3, right_rows: 2, right_cols: 2 }
        );
        assert!(err.to_string().contains("2x3"));
    }

    #[test]
    fn kronecker_of_identities() {
        let k = LinearMap::identity(Q, 2).kronecker(&LinearMap::identity(Q, 3));
        assert_eq!(k, LinearMap::identity(Q, 6));
    }

    #[test]
    fn kronecker_swap_block() {
        // Basis images: e_{(0,j)} -> e_{(1,j)}, e_{(1,j)} -> e_{(0,j)}.
        let swap = LinearMap::from_ints(Q, &[&[0, 1], &[1, 0]]);
        let k = swap.kronecker(&LinearMap::identity(Q, 2));
        let expected = LinearMap::from_ints(
            Q,
            &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]],
        );
        assert_eq!(k, expected);
    }

    #[test]
    fn flip_edge_cases() {
        assert_eq!(LinearMap::flip(Q, 1, 4), LinearMap::identity(Q, 4));
        let round = LinearMap::flip(Q, 2, 3).compose(&LinearMap::flip(Q, 3, 2)).unwrap();
        assert!(round.is_identity());
        // e_0 ⊗ e_1 (index 1) goes to e_1 ⊗ e_0 (index 1 * 2 + 0 = 2).
        assert!(LinearMap::flip(Q, 2, 3).get(2, 1).is_one());
    }

    #[test]
    fn permute_three_factors() {
        // (a, b, c) -> (c, a, b)
        let p = LinearMap::permute_factors(Q, &[2, 3, 2], &[2, 0, 1]);
        let src = 1 * 6 + 2 * 2 + 1; // (1, 2, 1)
        let dst = 1 * 6 + 1 * 3 + 2; // (1, 1, 2)
        assert!(p.get(dst, src).is_one());
        let back = LinearMap::permute_factors(Q, &[2, 2, 3], &[1, 2, 0]);
        assert!(back.compose(&p).unwrap().is_identity());
    }

    #[test]
    fn inverse_round_trip() {
        let a = LinearMap::from_ints(Q, &[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&a).unwrap().is_identity());
        let singular = LinearMap::from_ints(Q, &[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_err());
    }

    #[test]
    fn first_difference_reports_position() {
        let a = LinearMap::from_ints(Q, &[&[1, 0], &[0, 1]]);
        let b = LinearMap::from_ints(Q, &[&[1, 0], &[5, 1]]);
        let (r, c, x, y) = a.first_difference(&b).unwrap();
        assert_eq!((r, c), (1, 0));
        assert!(x.is_zero());
        assert_eq!(y, Q.from_i64(5));
        assert!(a.first_difference(&a).is_none());
    }

    proptest! {
        #[test]
        fn compose_matches_triple_loop(f in small_map(4, 4), g in small_map(4, 4)) {
            prop_assert_eq!(f.compose(&g).unwrap(), naive_product(&f, &g));
        }

        #[test]
        fn kronecker_interchange(
            f in small_map(2, 2), g in small_map(2, 2),
            f2 in small_map(2, 2), g2 in small_map(2, 2),
        ) {
            let lhs = f.kronecker(&g).compose(&f2.kronecker(&g2)).unwrap();
            let rhs = f.compose(&f2).unwrap().kronecker(&g.compose(&g2).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn flip_is_natural(f in small_map(2, 3), g in small_map(3, 2)) {
            // τ_{2,3} ∘ (f ⊗ g) = (g ⊗ f) ∘ τ_{3,2}, with f: 3→2 and g: 2→3.
            let lhs = LinearMap::flip(Q, 2, 3).compose(&f.kronecker(&g)).unwrap();
            let rhs = g.kronecker(&f).compose(&LinearMap::flip(Q, 3, 2)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn flip_involution(m in 0usize..5, n in 0usize..5) {
            let round = LinearMap::flip(Q, n, m).compose(&LinearMap::flip(Q, m, n)).unwrap();
            prop_assert!(round.is_identity());
        }
    }
}
