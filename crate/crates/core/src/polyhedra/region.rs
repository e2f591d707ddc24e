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

use super::Polyhedron;
use crate::error::{Error, Result};
use crate::num::Rational;

/// Finite union of generalized polyhedra in a common space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    dim: usize,
    pieces: Vec<Polyhedron>,
}

impl Region {
    pub fn new(dim: usize, pieces: Vec<Polyhedron>) -> Result<Self> {
        for p in &pieces {
            Error::check_dim(dim, p.dim())?;
        }
        Ok(Self { dim, pieces })
    }

    pub fn empty(dim: usize) -> Self {
        Self { dim, pieces: Vec::new() }
    }

    pub fn from_polyhedron(p: Polyhedron) -> Self {
        Self { dim: p.dim(), pieces: alloc::vec![p] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pieces(&self) -> &[Polyhedron] {
        &self.pieces
    }

    pub fn into_pieces(self) -> Vec<Polyhedron> {
        self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.iter().all(Polyhedron::is_empty)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.pieces.iter().any(|p| p.contains(x))
    }

    pub fn push(&mut self, p: Polyhedron) {
        assert_eq!(p.dim(), self.dim);
        self.pieces.push(p);
    }

    pub fn union(mut self, other: Region) -> Result<Region> {
        Error::check_dim(self.dim, other.dim)?;
        self.pieces.extend(other.pieces);
        Ok(self)
    }

    /// Drops empty pieces.
    pub fn pruned(self) -> Region {
        let pieces = self.pieces.into_iter().filter(|p| !p.is_empty()).collect();
        Region { dim: self.dim, pieces }
    }

    /// Complement of one polyhedron as the disjoint union of
    /// `r_1 ∧ .. ∧ r_{k-1} ∧ ¬r_k`, empty members removed.
    pub fn complement_of(p: &Polyhedron) -> Region {
        Region::from_polyhedron(Polyhedron::whole(p.dim())).subtract_polyhedron(p)
    }

    pub fn intersect_polyhedron(&self, p: &Polyhedron) -> Result<Region> {
        Error::check_dim(self.dim, p.dim())?;
        let pieces = self
            .pieces
            .iter()
            .map(|a| a.intersect(p).expect("checked dimension"))
            .filter(|a| !a.is_empty())
            .collect();
        Ok(Region { dim: self.dim, pieces })
    }

    pub fn intersect(&self, other: &Region) -> Result<Region> {
        Error::check_dim(self.dim, other.dim)?;
        let mut pieces = Vec::new();
        for a in &self.pieces {
            for b in &other.pieces {
                let c = a.intersect(b)?;
                if !c.is_empty() {
                    pieces.push(c);
                }
            }
        }
        Ok(Region { dim: self.dim, pieces })
    }

    /// `self \ p`, distributing the complement of `p` row by row.
    pub fn subtract_polyhedron(&self, p: &Polyhedron) -> Region {
        assert_eq!(self.dim, p.dim());
        let rows = p.canonicalize().into_rows();
        let mut pieces = Vec::new();
        for a in &self.pieces {
            let mut prefix = a.clone();
            if prefix.is_empty() {
                continue;
            }
            for r in &rows {
                let cand = prefix.clone().with_row(r.complement()).canonicalize();
                if !cand.is_empty() {
                    pieces.push(cand);
                }
                prefix = prefix.with_row(r.clone());
                if prefix.is_empty() {
                    break;
                }
            }
        }
        Region { dim: self.dim, pieces }
    }

    /// `self \ other`
    pub fn subtract(&self, other: &Region) -> Result<Region> {
        Error::check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for p in &other.pieces {
            if out.pieces.is_empty() {
                break;
            }
            out = out.subtract_polyhedron(p);
        }
        Ok(out)
    }

    pub fn is_subset_of(&self, other: &Region) -> Result<bool> {
        Ok(self.subtract(other)?.is_empty())
    }

    pub fn set_eq(&self, other: &Region) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }
}
