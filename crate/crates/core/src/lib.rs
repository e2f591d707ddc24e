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

//! Exact solver for Pareto and weak-Pareto sets of piecewise linear vector
//! optimization problems over `Q^p`.
//!
//! Every set is a finite union of generalized polyhedra over arbitrary precision
//! rationals; there is no floating point anywhere in the crate.

#![no_std]

extern crate alloc;

pub mod error;
pub mod instances;
pub mod linalg;
pub mod num;
pub mod oracle;
pub mod order;
pub mod polyhedra;
pub mod pwl;
pub mod reduction;
pub mod solver;

pub use error::{Error, Result};
pub use num::{Rational, Vector};
pub use polyhedra::{Cone, FaceCertificate, Halfspace, LpStatus, Polyhedron, Region, Subspace};
