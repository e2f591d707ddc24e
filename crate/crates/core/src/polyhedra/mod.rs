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

//! Exact polyhedral computation over `Q^n`.
//!
//! A [`Polyhedron`] is a finite list of rational halfspaces, each either non-strict
//! (`<a, x> <= b`) or strict (`<a, x> < b`). Systems without strict rows are ordinary
//! polyhedra; mixed systems are generalized polyhedra. An empty row list is the whole
//! space. Every emptiness, interior and redundancy question is answered by the exact
//! simplex in [`lp`].

mod cone;
mod faces;
mod fm;
pub mod lp;
mod ops;
mod refine;
mod region;
mod subspace;

use alloc::vec::Vec;

use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::num::{self, Rational, Vector};

pub use cone::Cone;
pub use faces::FaceCertificate;
pub use lp::LpStatus;
pub use refine::{refine_partition, refine_partition_indexed};
pub use region::Region;
pub use subspace::Subspace;

/// `<functional, x> <= bound`, or `< bound` when `strict`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halfspace {
    pub functional: Vector,
    pub bound: Rational,
    pub strict: bool,
}

impl Halfspace {
    pub fn le(functional: Vector, bound: Rational) -> Self {
        Self { functional, bound, strict: false }
    }

    pub fn lt(functional: Vector, bound: Rational) -> Self {
        Self { functional, bound, strict: true }
    }

    /// `<functional, x> >= bound`
    pub fn ge(functional: Vector, bound: Rational) -> Self {
        Self::le(num::neg(&functional), -bound)
    }

    /// `<functional, x> > bound`
    pub fn gt(functional: Vector, bound: Rational) -> Self {
        Self::lt(num::neg(&functional), -bound)
    }

    pub fn dim(&self) -> usize {
        self.functional.len()
    }

    /// `bound - <functional, x>`
    pub fn slack(&self, x: &[Rational]) -> Rational {
        &self.bound - num::dot(&self.functional, x)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        let s = self.slack(x);
        if self.strict {
            s.is_positive()
        } else {
            !s.is_negative()
        }
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        self.slack(x).is_zero()
    }

    /// The set-theoretic complement, itself a halfspace of the opposite strictness.
    pub fn complement(&self) -> Self {
        Self {
            functional: num::neg(&self.functional),
            bound: -self.bound.clone(),
            strict: !self.strict,
        }
    }

    /// Opposite inequality on the same hyperplane, same strictness.
    pub fn reversed(&self) -> Self {
        Self {
            functional: num::neg(&self.functional),
            bound: -self.bound.clone(),
            strict: self.strict,
        }
    }

    pub fn closed(&self) -> Self {
        Self { strict: false, ..self.clone() }
    }

    pub fn opened(&self) -> Self {
        Self { strict: true, ..self.clone() }
    }

    /// Positive rescaling so that the first nonzero coefficient is `+-1`.
    pub fn normalized(&self) -> Self {
        match num::normalizer(&self.functional) {
            Some(s) => Self {
                functional: num::scale(&self.functional, &s),
                bound: &self.bound * &s,
                strict: self.strict,
            },
            None => self.clone(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        num::is_zero(&self.functional)
    }

    /// For a zero functional: whether the row holds everywhere.
    fn trivially_true(&self) -> bool {
        if self.strict {
            self.bound.is_positive()
        } else {
            !self.bound.is_negative()
        }
    }

    /// Pull-back through the affine map `x -> M x + c`.
    pub fn preimage(&self, matrix: &Matrix, offset: &[Rational]) -> Self {
        Self {
            functional: matrix.transpose_apply(&self.functional),
            bound: &self.bound - num::dot(&self.functional, offset),
            strict: self.strict,
        }
    }
}

/// Writes `x1 - 2 x3 <= 1/2`, with variables numbered from 1.
impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.functional.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            match (first, a.is_negative()) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            if !mag.is_one() {
                write!(f, "{mag} ")?;
            }
            write!(f, "x{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " {} {}", if self.strict { "<" } else { "<=" }, self.bound)
    }
}

/// Writes the rows separated by `, ` inside braces.
impl fmt::Display for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

/// Intersection of finitely many halfspaces in `Q^dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polyhedron {
    dim: usize,
    rows: Vec<Halfspace>,
}

impl Polyhedron {
    pub fn new(dim: usize, rows: Vec<Halfspace>) -> Result<Self> {
        for r in &rows {
            Error::check_dim(dim, r.dim())?;
        }
        Ok(Self { dim, rows })
    }

    pub fn whole(dim: usize) -> Self {
        Self { dim, rows: Vec::new() }
    }

    /// Canonical empty set `{0 <= -1}`.
    pub fn empty(dim: usize) -> Self {
        Self { dim, rows: alloc::vec![Halfspace::le(num::zeros(dim), num::int(-1))] }
    }

    /// Closed box `lo <= x <= hi`.
    pub fn boxed(lo: &[Rational], hi: &[Rational]) -> Self {
        let dim = lo.len();
        let mut rows = Vec::with_capacity(2 * dim);
        for i in 0..dim {
            rows.push(Halfspace::ge(num::unit(dim, i), lo[i].clone()));
            rows.push(Halfspace::le(num::unit(dim, i), hi[i].clone()));
        }
        Self { dim, rows }
    }

    pub fn point(p: &[Rational]) -> Self {
        Self::boxed(p, p)
    }

    /// Builds a closed polyhedron from integer rows `(a, b)` meaning `<a, x> <= b`.
    pub fn from_i64(dim: usize, rows: &[(&[i64], i64)]) -> Self {
        let rows = rows
            .iter()
            .map(|(a, b)| {
                assert_eq!(a.len(), dim);
                Halfspace::le(num::vector(a), num::int(*b))
            })
            .collect();
        Self { dim, rows }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn rows(&self) -> &[Halfspace] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Halfspace> {
        self.rows
    }

    pub fn is_whole_space_rep(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.rows.iter().all(|r| !r.strict)
    }

    pub fn require_closed(&self) -> Result<()> {
        if self.is_closed() {
            Ok(())
        } else {
            Err(Error::StrictRows)
        }
    }

    pub fn closure_rows(&self) -> Self {
        Self { dim: self.dim, rows: self.rows.iter().map(Halfspace::closed).collect() }
    }

    /// Every row made strict. For a closed polyhedron with nonempty interior and
    /// nonzero rows this is exactly the interior.
    pub fn interior_rows(&self) -> Self {
        Self { dim: self.dim, rows: self.rows.iter().map(Halfspace::opened).collect() }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        debug_assert_eq!(x.len(), self.dim);
        self.rows.iter().all(|r| r.contains(x))
    }

    pub fn push(&mut self, row: Halfspace) {
        assert_eq!(row.dim(), self.dim, "row dimension mismatch");
        self.rows.push(row);
    }

    pub fn with_row(mut self, row: Halfspace) -> Self {
        self.push(row);
        self
    }

    /// Adds `<a, x> = b` as two opposite non-strict rows.
    pub fn with_equality(mut self, functional: Vector, bound: Rational) -> Self {
        let row = Halfspace::le(functional, bound);
        let rev = row.reversed();
        self.push(row);
        self.push(rev);
        self
    }

    /// Row concatenation without any simplification.
    pub fn meet(&self, other: &Polyhedron) -> Result<Self> {
        Error::check_dim(self.dim, other.dim)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Self { dim: self.dim, rows })
    }

    /// Syntactic cleanup: rows are rescaled, rows with a zero functional are dropped
    /// when they always hold (the whole system collapses to [`Polyhedron::empty`] when
    /// one never holds), and among rows with the same normalized functional only the
    /// tightest survives. First-occurrence order is kept.
    pub fn canonicalize(&self) -> Self {
        let mut out: Vec<Halfspace> = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            if r.is_trivial() {
                if r.trivially_true() {
                    continue;
                }
                return Self::empty(self.dim);
            }
            let n = r.normalized();
            match out.iter_mut().find(|o| o.functional == n.functional) {
                Some(o) => {
                    if n.bound < o.bound || (n.bound == o.bound && n.strict) {
                        *o = n;
                    }
                }
                None => out.push(n),
            }
        }
        Self { dim: self.dim, rows: out }
    }

    /// `{x : M x + c in self}` for `M` with `self.dim()` rows.
    pub fn preimage(&self, matrix: &Matrix, offset: &[Rational]) -> Result<Self> {
        Error::check_dim(self.dim, matrix.nrows())?;
        Error::check_dim(self.dim, offset.len())?;
        let rows = self.rows.iter().map(|r| r.preimage(matrix, offset)).collect();
        Ok(Self { dim: matrix.ncols(), rows })
    }

    /// Rows that are tight at `x`.
    pub fn tight_rows(&self, x: &[Rational]) -> Vec<usize> {
        (0..self.rows.len()).filter(|&i| self.rows[i].is_tight(x)).collect()
    }

    /// Reorders rows by their (normalized) content, giving a representation that
    /// ignores input row order.
    pub fn sorted(&self) -> Self {
        let mut rows: Vec<Halfspace> = self.rows.iter().map(Halfspace::normalized).collect();
        rows.sort();
        rows.dedup();
        Self { dim: self.dim, rows }
    }

    /// Moves every row into a larger space, padding coefficients with zeros at
    /// `offset..offset + self.dim()`.
    pub fn embed(&self, dim: usize, offset: usize) -> Self {
        assert!(offset + self.dim <= dim);
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut f = num::zeros(dim);
                f[offset..offset + self.dim].clone_from_slice(&r.functional);
                Halfspace { functional: f, bound: r.bound.clone(), strict: r.strict }
            })
            .collect();
        Self { dim, rows }
    }
}
