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


//! Seeded random instances shared by the integration tests.

#![allow(dead_code)]

use plvo_core::linalg::Matrix;
use plvo_core::num::{self, int, Rational, Vector};
use plvo_core::polyhedra::{Cone, Halfspace, Polyhedron};
use plvo_core::pwl::{AffineMap, Cell, PwlFunction};
use plvo_core::reduction::{Constraint, PlpCell, PlpInstance};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn coef(rng: &mut ChaCha8Rng) -> Rational {
    int(rng.gen_range(-2..=2))
}

pub fn vec_on(rng: &mut ChaCha8Rng, n: usize, support: &[usize]) -> Vector {
    (0..n).map(|i| if support.contains(&i) { coef(rng) } else { int(0) }).collect()
}

pub fn matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_rows(cols, (0..rows).map(|_| (0..cols).map(|_| coef(rng)).collect()).collect())
}

/// Coordinates the cell rows may use; sometimes a strict subset.
pub fn random_support(rng: &mut ChaCha8Rng, p: usize) -> Vec<usize> {
    let mut support: Vec<usize> = (0..p).collect();
    if p > 1 && rng.gen_bool(0.4) {
        support.shuffle(rng);
        support.truncate(rng.gen_range(1..p));
        support.sort_unstable();
    }
    support
}

/// Pieces of `max_k (c_k x + d_k)`: the full-dimensional cells and their affine parts.
pub fn max_affine(rng: &mut ChaCha8Rng, p: usize, pieces: usize, support: &[usize]) -> Vec<(Polyhedron, Vector, Rational)> {
    let mut parts: Vec<(Vector, Rational)> = Vec::new();
    for _ in 0..pieces {
        let part = (vec_on(rng, p, support), coef(rng));
        if !parts.contains(&part) {
            parts.push(part);
        }
    }
    let mut out = Vec::new();
    for (k, (c, d)) in parts.iter().enumerate() {
        let rows = parts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, (cj, dj))| Halfspace::le(num::sub(cj, c), d - dj))
            .collect();
        let domain = Polyhedron::new(p, rows).unwrap();
        if domain.has_interior() {
            out.push((domain, c.clone(), d.clone()));
        }
    }
    out
}

/// Continuous PWL map `x ↦ M x + m + w·g(x)` with `g` max-affine.
pub fn random_pwl(rng: &mut ChaCha8Rng, p: usize, q: usize, pieces: usize) -> PwlFunction {
    let support = random_support(rng, p);
    let g = max_affine(rng, p, pieces, &support);
    let m = matrix(rng, q, p);
    let m0: Vector = (0..q).map(|_| coef(rng)).collect();
    let w: Vector = (0..q).map(|_| coef(rng)).collect();
    let cells = g
        .into_iter()
        .map(|(domain, c, d)| {
            let rows = (0..q).map(|i| num::axpy(m.row(i), &w[i], &c)).collect();
            let offset = (0..q).map(|i| &m0[i] + &w[i] * &d).collect();
            Cell { domain, map: AffineMap::new(Matrix::from_rows(p, rows), offset).unwrap() }
        })
        .collect();
    PwlFunction::new(p, q, cells).unwrap()
}

/// A random problem with `p <= 3`, `q <= 2`, at most four cells and four constraints, and `C = Q^q_+`.
pub fn random_instance(rng: &mut ChaCha8Rng) -> PlpInstance {
    random_instance_with(rng, 2)
}

pub fn random_instance_with(rng: &mut ChaCha8Rng, max_q: usize) -> PlpInstance {
    let p = rng.gen_range(1..=3);
    let q = rng.gen_range(1..=max_q);
    let l = rng.gen_range(1..=4);
    let pieces = rng.gen_range(1..=4);
    let support = random_support(rng, p);
    let g = max_affine(rng, p, pieces, &support);
    let m = matrix(rng, q, p);
    let m0: Vector = (0..q).map(|_| coef(rng)).collect();
    let w: Vector = (0..q).map(|_| coef(rng)).collect();
    let lin: Vec<(Vector, Rational, Rational)> = (0..l)
        .map(|_| {
            let a = vec_on(rng, p, &support);
            let s = coef(rng);
            (a, int(rng.gen_range(1..=3)), s)
        })
        .collect();
    let cells = g
        .into_iter()
        .map(|(domain, c, d)| {
            let rows = (0..q).map(|i| num::axpy(m.row(i), &w[i], &c)).collect();
            let offset = (0..q).map(|i| &m0[i] + &w[i] * &d).collect();
            let map = AffineMap::new(Matrix::from_rows(p, rows), offset).unwrap();
            let constraints = lin
                .iter()
                .map(|(a, b, s)| Constraint { xstar: num::axpy(a, s, &c), c: b - s * &d })
                .collect();
            PlpCell { domain, map, constraints }
        })
        .collect();
    PlpInstance::new(p, q, l, cells, Cone::orthant(q)).unwrap()
}

/// Random polyhedron in `Q^dim` with nonempty interior.
pub fn full_dim_polyhedron(rng: &mut ChaCha8Rng, dim: usize, rows: usize) -> Polyhedron {
    loop {
        let support: Vec<usize> = (0..dim).collect();
        let rs = (0..rows)
            .map(|_| Halfspace::le(vec_on(rng, dim, &support), coef(rng) + int(1)))
            .filter(|h| !num::is_zero(&h.functional))
            .collect();
        let poly = Polyhedron::new(dim, rs).unwrap();
        if poly.has_interior() {
            return poly;
        }
    }
}

pub fn finite_set(rng: &mut ChaCha8Rng, dim: usize, max: usize) -> Vec<Vector> {
    let n = rng.gen_range(1..=max);
    (0..n).map(|_| (0..dim).map(|_| coef(rng)).collect()).collect()
}

pub fn grid_points(dim: usize, lo: i64, hi: i64, den: i64) -> Vec<Vector> {
    let axis: Vec<Rational> = (lo * den..=hi * den).map(|k| num::ratio(k, den)).collect();
    let mut out: Vec<Vector> = vec![Vec::new()];
    for _ in 0..dim {
        out = out.into_iter().flat_map(|v| axis.iter().map(move |a| [v.clone(), vec![a.clone()]].concat())).collect();
    }
    out
}
