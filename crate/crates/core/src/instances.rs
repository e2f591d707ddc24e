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

//! Small worked instances used throughout the documentation and tests.

use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::Matrix;
use crate::num::{int, vector};
use crate::polyhedra::{Cone, Polyhedron};
use crate::pwl::AffineMap;
use crate::reduction::{Constraint, PlpCell, PlpInstance};

fn constraint(xstar: &[i64], c: i64) -> Constraint {
    Constraint { xstar: vector(xstar), c: int(c) }
}

/// Minimize `|x|` over `x <= 1` in `Q` with `C = Q_+`.
pub fn abs_value() -> PlpInstance {
    let cells = vec![
        PlpCell {
            domain: Polyhedron::from_i64(1, &[(&[1], 0)]),
            map: AffineMap::linear(Matrix::from_i64(&[&[-1]])),
            constraints: vec![constraint(&[1], 1)],
        },
        PlpCell {
            domain: Polyhedron::from_i64(1, &[(&[-1], 0)]),
            map: AffineMap::linear(Matrix::from_i64(&[&[1]])),
            constraints: vec![constraint(&[1], 1)],
        },
    ];
    PlpInstance::new(1, 1, 1, cells, Cone::orthant(1)).expect("valid instance")
}

/// Minimize `f(x) = x` over the unit square with `C = Q^2_+`.
pub fn unit_square() -> PlpInstance {
    let cells = vec![PlpCell {
        domain: Polyhedron::whole(2),
        map: AffineMap::linear(Matrix::identity(2)),
        constraints: vec![
            constraint(&[-1, 0], 0),
            constraint(&[1, 0], 1),
            constraint(&[0, -1], 0),
            constraint(&[0, 1], 1),
        ],
    }];
    PlpInstance::new(2, 2, 4, cells, Cone::orthant(2)).expect("valid instance")
}

/// `f(x) = (|x1| + x2, x3)` on `Q^3` subject to `x1 <= 1`. Every cell generator and the
/// constraint only involve `x1`, so `X1 = span{e2, e3}`.
pub fn split_q3() -> PlpInstance {
    let cells = vec![
        PlpCell {
            domain: Polyhedron::from_i64(3, &[(&[1, 0, 0], 0)]),
            map: AffineMap::linear(Matrix::from_i64(&[&[-1, 1, 0], &[0, 0, 1]])),
            constraints: vec![constraint(&[1, 0, 0], 1)],
        },
        PlpCell {
            domain: Polyhedron::from_i64(3, &[(&[-1, 0, 0], 0)]),
            map: AffineMap::linear(Matrix::from_i64(&[&[1, 1, 0], &[0, 0, 1]])),
            constraints: vec![constraint(&[1, 0, 0], 1)],
        },
    ];
    PlpInstance::new(3, 2, 1, cells, Cone::orthant(2)).expect("valid instance")
}

/// Every worked instance with a short name.
pub fn all() -> Vec<(&'static str, PlpInstance)> {
    vec![("abs", abs_value()), ("square", unit_square()), ("q3", split_q3())]
}
