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

use super::{Halfspace, Polyhedron, Subspace};
use crate::error::{Error, Result};
use crate::num::{self, Rational, Vector};

/// Polyhedral cone `{y : <a_k, y> <= 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone {
    rep: Polyhedron,
}

impl Cone {
    /// Builds a cone from homogeneous non-strict rows.
    pub fn new(rep: Polyhedron) -> Result<Self> {
        if rep.rows().iter().any(|r| r.strict || !r.bound.is_zero()) {
            return Err(Error::NotACone);
        }
        Ok(Self { rep })
    }

    /// Cone given by the functionals `a_k` of `<a_k, y> <= 0`.
    pub fn from_functionals(dim: usize, functionals: Vec<Vector>) -> Result<Self> {
        let rows = functionals.into_iter().map(|a| Halfspace::le(a, Rational::zero())).collect();
        Self::new(Polyhedron::new(dim, rows)?)
    }

    /// The nonnegative orthant `Q^dim_+`.
    pub fn orthant(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| Halfspace::le(num::neg(&num::unit(dim, i)), Rational::zero()))
            .collect();
        Self { rep: Polyhedron::new(dim, rows).expect("orthant rows") }
    }

    /// The trivial cone `{0}`.
    pub fn zero(dim: usize) -> Self {
        Self { rep: Polyhedron::point(&num::zeros(dim)) }
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn polyhedron(&self) -> &Polyhedron {
        &self.rep
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.rep.contains(v)
    }

    /// The all-strict system. Equal to `int(C)` whenever that interior is nonempty.
    pub fn interior(&self) -> Polyhedron {
        self.rep.canonicalize().interior_rows()
    }

    pub fn has_interior(&self) -> bool {
        !self.interior().is_empty()
    }

    pub fn interior_contains(&self, v: &[Rational]) -> bool {
        self.has_interior() && self.interior().contains(v)
    }

    pub fn lineality(&self) -> Subspace {
        let f: Vec<Vector> = self.rep.rows().iter().map(|r| r.functional.clone()).collect();
        Subspace::kernel(self.dim(), &f).expect("cone rows share dimension")
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality().is_zero()
    }

    /// `{y : y - v in C}` for a fixed `v`: the translate `v + C`.
    pub fn translate(&self, v: &[Rational]) -> Polyhedron {
        let rows = self
            .rep
            .rows()
            .iter()
            .map(|r| Halfspace::le(r.functional.clone(), num::dot(&r.functional, v)))
            .collect();
        Polyhedron::new(self.dim(), rows).expect("translate rows")
    }

    /// `v - C`
    pub fn reflected_translate(&self, v: &[Rational]) -> Polyhedron {
        let rows = self
            .rep
            .rows()
            .iter()
            .map(|r| Halfspace::ge(r.functional.clone(), num::dot(&r.functional, v)))
            .collect();
        Polyhedron::new(self.dim(), rows).expect("translate rows")
    }

    /// `v - int(C)`
    pub fn reflected_open_translate(&self, v: &[Rational]) -> Polyhedron {
        let rows = self
            .rep
            .canonicalize()
            .rows()
            .iter()
            .map(|r| Halfspace::gt(r.functional.clone(), num::dot(&r.functional, v)))
            .collect();
        Polyhedron::new(self.dim(), rows).expect("translate rows")
    }

    pub fn set_eq(&self, other: &Cone) -> Result<bool> {
        self.rep.set_eq(&other.rep)
    }
}
