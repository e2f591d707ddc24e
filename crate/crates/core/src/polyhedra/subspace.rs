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

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::num::{Rational, Vector};

/// Linear subspace of `Q^ambient` given by a basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    /// Span of `vectors`; a maximal independent subset is kept in the given order.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            Error::check_dim(ambient, v.len())?;
        }
        let idx = linalg::independent_subset(ambient, vectors);
        Ok(Self { ambient, basis: idx.into_iter().map(|i| vectors[i].clone()).collect() })
    }

    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self { ambient, basis: (0..ambient).map(|i| crate::num::unit(ambient, i)).collect() }
    }

    /// `{x : <f, x> = 0 for every f in functionals}`
    pub fn kernel(ambient: usize, functionals: &[Vector]) -> Result<Self> {
        for f in functionals {
            Error::check_dim(ambient, f.len())?;
        }
        Ok(Self { ambient, basis: linalg::null_space(ambient, functionals) })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        linalg::in_span(self.ambient, &self.basis, v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    /// Coefficients of `v` in the basis.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        linalg::coordinates(self.ambient, &self.basis, v)
    }

    /// Matrix whose columns are the basis vectors.
    pub fn matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    /// Functionals whose common kernel is this subspace.
    pub fn annihilator(&self) -> Vec<Vector> {
        linalg::null_space(self.ambient, &self.basis)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        Error::check_dim(self.ambient, other.ambient)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        Error::check_dim(self.ambient, other.ambient)?;
        let mut ann = self.annihilator();
        ann.extend(other.annihilator());
        Subspace::kernel(self.ambient, &ann)
    }

    /// Whether `self + other` is direct and equals the ambient space.
    pub fn is_complement_of(&self, other: &Subspace) -> bool {
        if self.ambient != other.ambient || self.dim() + other.dim() != self.ambient {
            return false;
        }
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        linalg::rank(self.ambient, &all) == self.ambient
    }

    /// Image under a linear map.
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        Error::check_dim(self.ambient, m.ncols())?;
        let imgs: Vec<Vector> = self.basis.iter().map(|v| m.apply(v)).collect();
        Subspace::span(m.nrows(), &imgs)
    }

    /// A complement spanned by unit vectors.
    pub fn coordinate_complement(&self) -> Subspace {
        let full = linalg::extend_to_basis(self.ambient, &self.basis);
        Subspace { ambient: self.ambient, basis: full[self.basis.len()..].to_vec() }
    }
}
