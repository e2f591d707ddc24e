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

use alloc::string::String;

use thiserror::Error;

use crate::num::Vector;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation requires a nonempty polyhedron")]
    EmptyPolyhedron,

    /// Prime generator groups and face lattices are not defined for the whole space.
    #[error("operation is undefined for the whole space")]
    WholeSpace,

    #[error("operation requires a closed polyhedron (no strict rows)")]
    StrictRows,

    #[error("cell {0} has empty interior")]
    EmptyInterior(usize),

    #[error("subspace is not contained in the null space of every row")]
    NotInNullSpace,

    #[error("subspaces do not form a direct sum of the ambient space")]
    NotDirectSum,

    #[error("cone rows must be homogeneous and non-strict")]
    NotACone,

    /// The ordering cone has empty interior; the weak-efficiency machinery does not apply.
    #[error("ordering cone has empty interior")]
    EmptyConeInterior,

    #[error("no cell contains the point {0:?}")]
    Uncovered(Vector),

    #[error("piecewise linear function is invalid: {0}")]
    InvalidFunction(String),

    #[error("instance is invalid: {0}")]
    InvalidInstance(String),

    /// The union of the images plus the cone is not convex.
    #[error("objective image is not C-convex")]
    NotConeConvex,

    #[error("subproblem index {index} out of range ({count} cells)")]
    NoSuchCell { index: usize, count: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, found })
        }
    }
}
