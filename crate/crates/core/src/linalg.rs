//   Copyright 2026 plvo developers
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

//! Exact Gaussian elimination and small dense matrices.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::num::{self, Rational, Vector};

/// Row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vector>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: (0..rows).map(|_| num::zeros(cols)).collect() }
    }

    pub fn identity(n: usize) -> Self {
        Self { rows: n, cols: n, data: (0..n).map(|i| num::unit(n, i)).collect() }
    }

    /// Builds a matrix from its rows. All rows must have length `cols`.
    pub fn from_rows(cols: usize, data: Vec<Vector>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix rows");
        Self { rows: data.len(), cols, data }
    }

    /// Builds a matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let cols = columns.len();
        let data = (0..rows)
            .map(|r| columns.iter().map(|c| c[r].clone()).collect())
            .collect();
        Self { rows, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| num::vector(r)).collect())
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i]
    }

    pub fn rows(&self) -> &[Vector] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vector {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i][j] = value;
    }

    pub fn apply(&self, x: &[Rational]) -> Vector {
        assert_eq!(x.len(), self.cols, "matrix-vector dimension mismatch");
        self.data.iter().map(|r| num::dot(r, x)).collect()
    }

    /// `y^T A`, the pull-back of a functional on the codomain.
    pub fn transpose_apply(&self, y: &[Rational]) -> Vector {
        assert_eq!(y.len(), self.rows, "matrix-vector dimension mismatch");
        let mut out = num::zeros(self.cols);
        for (r, yr) in self.data.iter().zip(y) {
            if yr.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(r) {
                *o += yr * a;
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let data = self.data.iter().map(|r| other.transpose_apply(r)).collect();
        Matrix { rows: self.rows, cols: other.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| num::sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Matrix {
        let data = (0..self.cols).map(|j| self.column(j)).collect();
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| num::concat(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols + other.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| num::is_zero(r))
    }

    pub fn into_rows(self) -> Vec<Vector> {
        self.data
    }
}

/// Reduced row echelon form of a row list with `cols` columns. Returns the reduced
/// nonzero rows and the pivot column of each.
pub fn rref(cols: usize, rows: &[Vector]) -> (Vec<Vector>, Vec<usize>) {
    let mut m: Vec<Vector> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        if !inv.is_one() {
            for v in m[r].iter_mut() {
                *v *= &inv;
            }
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let (pivot_row, other) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (o, pv) in other.iter_mut().zip(pivot_row.iter()) {
                    if !pv.is_zero() {
                        *o -= &factor * pv;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(cols: usize, rows: &[Vector]) -> usize {
    rref(cols, rows).1.len()
}

/// Basis of `{x : <row, x> = 0 for every row}`. Free variables are set to unit values
/// one at a time, giving the canonical RREF kernel basis.
pub fn null_space(cols: usize, rows: &[Vector]) -> Vec<Vector> {
    let (reduced, pivots) = rref(cols, rows);
    let mut is_pivot = alloc::vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = num::unit(cols, free);
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

/// One solution of `rows * x = rhs`: back-substitution on the RREF with all free
/// variables set to zero. `None` when the system is inconsistent.
pub fn solve(cols: usize, rows: &[Vector], rhs: &[Rational]) -> Option<Vector> {
    assert_eq!(rows.len(), rhs.len());
    let augmented: Vec<Vector> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let (reduced, pivots) = rref(cols + 1, &augmented);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = num::zeros(cols);
    for (row, &p) in reduced.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}

/// Indices of a maximal linearly independent subset, chosen greedily in order.
pub fn independent_subset(dim: usize, vectors: &[Vector]) -> Vec<usize> {
    let mut kept: Vec<Vector> = Vec::new();
    let mut idx = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if num::is_zero(v) {
            continue;
        }
        kept.push(v.clone());
        if rank(dim, &kept) == kept.len() {
            idx.push(i);
        } else {
            kept.pop();
        }
    }
    idx
}

/// Coefficients `c` with `sum_k c_k basis_k = v`, if `v` lies in the span.
pub fn coordinates(dim: usize, basis: &[Vector], v: &[Rational]) -> Option<Vector> {
    let m = Matrix::from_columns(dim, basis);
    solve(basis.len(), m.rows(), v)
}

pub fn in_span(dim: usize, basis: &[Vector], v: &[Rational]) -> bool {
    if num::is_zero(v) {
        return true;
    }
    coordinates(dim, basis, v).is_some()
}

/// Extends an independent list to a basis of `Q^dim` by appending unit vectors.
pub fn extend_to_basis(dim: usize, basis: &[Vector]) -> Vec<Vector> {
    let mut out: Vec<Vector> = basis.to_vec();
    for i in 0..dim {
        if out.len() == dim {
            break;
        }
        out.push(num::unit(dim, i));
        if rank(dim, &out) < out.len() {
            out.pop();
        }
    }
    out
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.nrows();
    if n != m.ncols() {
        return None;
    }
    if n == 0 {
        return Some(Matrix::zeros(0, 0));
    }
    let augmented: Vec<Vector> =
        (0..n).map(|i| num::concat(m.row(i), &num::unit(n, i))).collect();
    let (reduced, pivots) = rref(2 * n, &augmented);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    let data = reduced.into_iter().map(|r| r[n..].to_vec()).collect();
    Some(Matrix::from_rows(n, data))
}
