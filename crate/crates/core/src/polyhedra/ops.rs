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

use alloc::vec::Vec;

use num_traits::Zero;

use super::lp::{lp_feasible_optimal, LpStatus};
use super::{Cone, Halfspace, Polyhedron, Subspace};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::num::{self, Rational, Vector};

fn feasible(dim: usize, rows: &[Halfspace]) -> Option<Vector> {
    lp_feasible_optimal(dim, rows, None).expect("rows share dimension").point().cloned()
}

impl Polyhedron {
    pub fn is_empty(&self) -> bool {
        if self.rows().is_empty() {
            return false;
        }
        self.feasible_point().is_none()
    }

    pub fn feasible_point(&self) -> Option<Vector> {
        if self.rows().is_empty() {
            return Some(num::zeros(self.dim()));
        }
        feasible(self.dim(), self.rows())
    }

    /// Maximizes `<c, x>`. With strict rows the optimum is taken over the closure.
    pub fn maximize(&self, c: &[Rational]) -> Result<LpStatus> {
        lp_feasible_optimal(self.dim(), self.rows(), Some(c))
    }

    /// Indices of the non-strict rows that hold with equality on the whole set.
    pub fn implicit_equalities(&self) -> Result<Vec<usize>> {
        let x0 = self.feasible_point().ok_or(Error::EmptyPolyhedron)?;
        let mut witnesses = alloc::vec![x0];
        let mut out = Vec::new();
        for (i, r) in self.rows().iter().enumerate() {
            if r.strict || witnesses.iter().any(|w| !r.is_tight(w)) {
                continue;
            }
            let mut rows = self.rows().to_vec();
            rows.push(r.opened());
            match feasible(self.dim(), &rows) {
                Some(w) => witnesses.push(w),
                None => out.push(i),
            }
        }
        Ok(out)
    }

    /// Implicit equality rows and the affine dimension.
    pub fn affine_hull_and_dim(&self) -> Result<(Vec<usize>, usize)> {
        let eq = self.implicit_equalities()?;
        let f: Vec<Vector> = eq.iter().map(|&i| self.rows()[i].functional.clone()).collect();
        let dim = self.dim() - linalg::rank(self.dim(), &f);
        Ok((eq, dim))
    }

    /// Affine dimension, `None` for the empty set.
    pub fn affine_dim(&self) -> Option<usize> {
        self.affine_hull_and_dim().ok().map(|(_, d)| d)
    }

    /// Implicit equalities become equality pairs, every other row strict.
    pub fn relative_interior(&self) -> Result<Polyhedron> {
        let eq = self.implicit_equalities()?;
        let mut rows = Vec::with_capacity(self.rows().len() + eq.len());
        for (i, r) in self.rows().iter().enumerate() {
            if eq.contains(&i) {
                rows.push(r.clone());
                rows.push(r.reversed());
            } else {
                rows.push(r.opened());
            }
        }
        Polyhedron::new(self.dim(), rows)
    }

    pub fn relative_interior_point(&self) -> Result<Vector> {
        self.relative_interior()?
            .feasible_point()
            .ok_or_else(|| Error::Internal("relative interior is empty".into()))
    }

    /// Up to `count` distinct relative-interior points: a base point and midpoints
    /// towards optimizers of coordinate objectives over the closure.
    pub fn relative_interior_samples(&self, count: usize) -> Result<Vec<Vector>> {
        let x0 = self.relative_interior_point()?;
        let mut out = alloc::vec![x0.clone()];
        let closure = self.closure_rows();
        let half = num::ratio(1, 2);
        let n = self.dim();
        let mut objectives: Vec<Vector> = Vec::new();
        objectives.push((0..n).map(|_| num::int(1)).collect());
        objectives.push((0..n).map(|_| num::int(-1)).collect());
        for j in 0..n {
            objectives.push(num::unit(n, j));
            objectives.push(num::neg(&num::unit(n, j)));
        }
        for c in objectives {
            if out.len() >= count {
                break;
            }
            let Some(v) = closure.maximize(&c)?.point().cloned() else { continue };
            let mid: Vector = x0.iter().zip(&v).map(|(a, b)| (a + b) * &half).collect();
            if !out.contains(&mid) {
                out.push(mid);
            }
        }
        Ok(out)
    }

    /// Removes rows first to last while the set stays unchanged.
    pub fn remove_redundant(&self) -> Polyhedron {
        if self.is_empty() {
            return Polyhedron::empty(self.dim());
        }
        let mut keep: Vec<Halfspace> = self.rows().to_vec();
        let mut i = 0;
        while i < keep.len() {
            let mut test: Vec<Halfspace> = Vec::with_capacity(keep.len());
            test.extend(keep[..i].iter().cloned());
            test.extend(keep[i + 1..].iter().cloned());
            test.push(keep[i].complement());
            if feasible(self.dim(), &test).is_none() {
                keep.remove(i);
            } else {
                i += 1;
            }
        }
        Polyhedron::new(self.dim(), keep).expect("same dimension")
    }

    /// Irredundant subsystem describing the same nonempty proper subset.
    pub fn prime_generator_group(&self) -> Result<Polyhedron> {
        if self.is_empty() {
            return Err(Error::EmptyPolyhedron);
        }
        let p = self.remove_redundant();
        if p.rows().is_empty() {
            return Err(Error::WholeSpace);
        }
        Ok(p)
    }

    /// Recession cone of the closure and lineality space.
    pub fn recession_and_lineality(&self) -> Result<(Cone, Subspace)> {
        if self.is_empty() {
            return Err(Error::EmptyPolyhedron);
        }
        let rows: Vec<Halfspace> = self
            .rows()
            .iter()
            .map(|r| Halfspace::le(r.functional.clone(), Rational::zero()))
            .collect();
        let f: Vec<Vector> = rows.iter().map(|r| r.functional.clone()).collect();
        let cone = Cone::new(Polyhedron::new(self.dim(), rows)?)?;
        Ok((cone, Subspace::kernel(self.dim(), &f)?))
    }

    /// Concatenated and canonicalized row system.
    pub fn intersect(&self, other: &Polyhedron) -> Result<Polyhedron> {
        Ok(self.meet(other)?.canonicalize())
    }

    /// `{p + q : p in self, q in other}`
    pub fn minkowski_sum(&self, other: &Polyhedron) -> Result<Polyhedron> {
        Error::check_dim(self.dim(), other.dim())?;
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyPolyhedron);
        }
        let n = self.dim();
        // variables (z, y): z - y in self, y in other
        let mut rows = Vec::with_capacity(self.rows().len() + other.rows().len());
        for r in self.rows() {
            rows.push(Halfspace {
                functional: num::concat(&r.functional, &num::neg(&r.functional)),
                bound: r.bound.clone(),
                strict: r.strict,
            });
        }
        for r in other.rows() {
            rows.push(Halfspace {
                functional: num::concat(&num::zeros(n), &r.functional),
                bound: r.bound.clone(),
                strict: r.strict,
            });
        }
        let lifted = Polyhedron::new(2 * n, rows)?;
        Ok(lifted.project(&(0..n).collect::<Vec<_>>()))
    }

    /// `S + self`
    pub fn plus_subspace(&self, s: &Subspace) -> Result<Polyhedron> {
        Error::check_dim(self.dim(), s.ambient_dim())?;
        let n = self.dim();
        let k = s.dim();
        let moves = |r: &Halfspace| s.basis().iter().any(|v| !num::dot(&r.functional, v).is_zero());
        if !self.rows().iter().any(moves) {
            return Ok(self.clone());
        }
        // variables (x, t): x - S t in self
        let rows = self
            .rows()
            .iter()
            .map(|r| {
                let mut f = r.functional.clone();
                f.extend(s.basis().iter().map(|v| -num::dot(&r.functional, v)));
                Halfspace { functional: f, bound: r.bound.clone(), strict: r.strict }
            })
            .collect();
        let lifted = Polyhedron::new(n + k, rows)?;
        Ok(lifted.project(&(0..n).collect::<Vec<_>>()))
    }

    /// Restriction to `Z2` expressed in the basis of `Z2`, assuming `Z1` lies in the
    /// null space of every row and `Z1 + Z2` is direct and exhaustive.
    pub fn decompose_along(&self, z1: &Subspace, z2: &Subspace) -> Result<Polyhedron> {
        Error::check_dim(self.dim(), z1.ambient_dim())?;
        Error::check_dim(self.dim(), z2.ambient_dim())?;
        for r in self.rows() {
            if z1.basis().iter().any(|v| !num::dot(&r.functional, v).is_zero()) {
                return Err(Error::NotInNullSpace);
            }
        }
        if !z1.is_complement_of(z2) {
            return Err(Error::NotDirectSum);
        }
        self.preimage(&z2.matrix(), &num::zeros(self.dim()))
    }

    /// `{M x + c : x in self}`
    pub fn image(&self, m: &Matrix, offset: &[Rational]) -> Result<Polyhedron> {
        Error::check_dim(self.dim(), m.ncols())?;
        Error::check_dim(m.nrows(), offset.len())?;
        let q = m.nrows();
        let p = self.dim();
        if let Some(inv) = (q == p).then(|| linalg::inverse(m)).flatten() {
            // y in image iff M^{-1}(y - c) in self
            let shift = num::neg(&inv.apply(offset));
            return self.preimage(&inv, &shift);
        }
        // variables (y, x): y = M x + c, x in self
        let mut rows = Vec::with_capacity(self.rows().len() + 2 * q);
        for r in self.rows() {
            rows.push(Halfspace {
                functional: num::concat(&num::zeros(q), &r.functional),
                bound: r.bound.clone(),
                strict: r.strict,
            });
        }
        for i in 0..q {
            let row = Halfspace::le(num::concat(&num::unit(q, i), &num::neg(m.row(i))), offset[i].clone());
            rows.push(row.reversed());
            rows.push(row);
        }
        let lifted = Polyhedron::new(q + p, rows)?;
        Ok(lifted.project(&(0..q).collect::<Vec<_>>()))
    }

    pub fn is_singleton(&self) -> bool {
        let Some(x0) = self.feasible_point() else { return false };
        let closure = self.closure_rows();
        for j in 0..self.dim() {
            for c in [num::unit(self.dim(), j), num::neg(&num::unit(self.dim(), j))] {
                match closure.maximize(&c).expect("dimension") {
                    LpStatus::Optimal { value, .. } if value == num::dot(&c, &x0) => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// Whether the set has nonempty interior.
    pub fn has_interior(&self) -> bool {
        let c = self.canonicalize();
        if c.rows().is_empty() {
            return true;
        }
        !c.interior_rows().is_empty()
    }

    /// `self ⊆ other`, tested row by row of `other`.
    pub fn is_subset_of(&self, other: &Polyhedron) -> Result<bool> {
        Error::check_dim(self.dim(), other.dim())?;
        let mut rows = self.rows().to_vec();
        for r in other.rows() {
            rows.push(r.complement());
            let hit = feasible(self.dim(), &rows).is_some();
            rows.pop();
            if hit {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn set_eq(&self, other: &Polyhedron) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    /// Whether `self ∩ other` is nonempty.
    pub fn meets(&self, other: &Polyhedron) -> Result<bool> {
        Ok(!self.meet(other)?.is_empty())
    }

    /// Bounding box of a nonempty polyhedron, `None` coordinates where unbounded.
    pub fn bounding_box(&self) -> Result<Vec<(Option<Rational>, Option<Rational>)>> {
        let closure = self.closure_rows();
        let mut out = Vec::with_capacity(self.dim());
        for j in 0..self.dim() {
            let e = num::unit(self.dim(), j);
            let hi = match closure.maximize(&e)? {
                LpStatus::Optimal { value, .. } => Some(value),
                LpStatus::Infeasible => return Err(Error::EmptyPolyhedron),
                _ => None,
            };
            let lo = match closure.maximize(&num::neg(&e))? {
                LpStatus::Optimal { value, .. } => Some(-value),
                _ => None,
            };
            out.push((lo, hi));
        }
        Ok(out)
    }
}
