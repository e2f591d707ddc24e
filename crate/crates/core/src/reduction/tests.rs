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

use alloc::vec;

use super::*;
use crate::instances;
use crate::num::{int, ratio, vector};

fn one_cell(p: usize, q: usize, functionals: &[&[i64]], t: Matrix, cone: Cone) -> PlpInstance {
    let constraints = functionals.iter().map(|f| Constraint { xstar: vector(f), c: int(1) }).collect();
    let cell = PlpCell { domain: Polyhedron::whole(p), map: AffineMap::linear(t), constraints };
    PlpInstance::new(p, q, functionals.len(), vec![cell], cone).unwrap()
}

#[test]
fn x1_examples() {
    let x1 = compute_x1(&instances::split_q3());
    assert_eq!(x1.dim(), 2);
    assert!(x1.contains(&vector(&[0, 1, 0])) && x1.contains(&vector(&[0, 0, 1])));
    let full = one_cell(2, 1, &[&[1, 0], &[0, 1]], Matrix::from_i64(&[&[1, 1]]), Cone::orthant(1));
    assert!(compute_x1(&full).is_zero());
    let funcs: [&[i64]; 3] = [&[1, 0, 1, 0], &[0, 1, 0, 1], &[1, 1, 1, 1]];
    let r2 = one_cell(4, 1, &funcs, Matrix::zeros(1, 4), Cone::orthant(1));
    let x1 = compute_x1(&r2);
    assert_eq!(x1.dim(), 2);
    for v in x1.basis() {
        for f in funcs {
            assert!(num::dot(&vector(f), v) == int(0));
        }
    }
}

#[test]
fn dual_bases() {
    let (e, h) = dual_pair(2, &[vector(&[1, 0])]);
    assert_eq!((e, h), (vec![vector(&[1, 0])], vec![vector(&[1, 0])]));
    let (_, h) = dual_pair(2, &[vector(&[1, 0]), vector(&[1, 1])]);
    assert_eq!(h, vec![vector(&[1, -1]), vector(&[0, 1])]);
    let (e, h) = dual_pair(2, &[]);
    assert!(e.is_empty() && h.is_empty());
}

#[test]
fn common_part_and_value_space() {
    let abs = instances::abs_value();
    let x1 = compute_x1(&abs);
    assert_eq!(compute_t_hat(&abs, &x1).unwrap().ncols(), 0);
    let (_, h) = compute_x2(&abs);
    let z = compute_z(&abs, &h, &Subspace::zero(1));
    assert_eq!(z.len(), 1);

    let q3 = instances::split_q3();
    let x1 = compute_x1(&q3);
    let t = compute_t_hat(&q3, &x1).unwrap();
    for c in q3.cells() {
        assert_eq!(c.map.matrix.mul(&x1.matrix()), t);
    }
    let img = x1.image(&q3.cells()[0].map.matrix).unwrap();
    let (_, h) = compute_x2(&q3);
    assert!(compute_z(&q3, &h, &img).is_empty());

    let mut bad = q3.clone();
    bad.cells[1].map.matrix.set(1, 1, int(5));
    assert!(compute_t_hat(&bad, &x1).is_err());
}

#[test]
fn reduced_cones() {
    let c = Cone::orthant(2);
    let id = [vector(&[1, 0]), vector(&[0, 1])];
    let r = compute_cz(&c, &[], &id).unwrap();
    assert!(r.c_z.set_eq(&c).unwrap() && r.int_nonempty && r.cone_condition && r.t_hat_pointed);
    let r = compute_cz(&c, &[], &[vector(&[1, -1])]).unwrap();
    assert!(r.c_z.polyhedron().is_singleton() && !r.int_nonempty);
    let r = compute_cz(&c, &[], &[vector(&[1, 1])]).unwrap();
    assert!(r.int_nonempty);
    assert!(r.c_z.contains(&vector(&[1])) && !r.c_z.contains(&vector(&[-1])));
    // the slice is all of Q^2 but sticks out of Z only through a direction C misses
    let r = compute_cz(&c, &[vector(&[1, -1])], &[vector(&[1, 0])]).unwrap();
    assert!(!r.cone_condition && r.t_hat_pointed);
    let r = compute_cz(&c, &[vector(&[1, 0])], &[vector(&[0, 1])]).unwrap();
    assert!(!r.cone_condition && !r.t_hat_pointed);
    // Z inside a facet hyperplane of C
    let c3 = Cone::orthant(3);
    let r = compute_cz(&c3, &[], &[vector(&[0, 1, 0]), vector(&[0, 0, 1])]).unwrap();
    assert!(!r.int_nonempty);
}

#[test]
fn abs_value_reduction() {
    let r = reduce(&instances::abs_value()).unwrap();
    assert!(r.x1.is_zero());
    assert_eq!((r.nu(), r.sigma()), (1, 1));
    let h = &r.h[0];
    // A_1 = {x <= 0, x <= 1}, A_2 = {0 <= x <= 1} in t coordinates
    for k in -8..=8 {
        let t = [ratio(k, 4)];
        let x = num::scale(h, &t[0]);
        assert_eq!(r.cells_hat[0].contains(&t), x[0] <= int(0));
        assert_eq!(r.cells_hat[1].contains(&t), x[0] >= int(0) && x[0] <= int(1));
    }
    assert!(r.int_nonempty && r.cone_condition);
}

#[test]
fn skip_mode_is_isomorphic() {
    let sq = instances::unit_square();
    let r = reduce_with(&sq, ReductionMode::Skip).unwrap();
    assert_eq!(r.cells_hat[0], sq.feasible_cell(0).unwrap());
    assert_eq!(r.fhat[0], sq.cells()[0].map);
    assert!(r.x1.is_zero() && r.sigma() == 2);
}

#[test]
fn empty_feasible_set() {
    let mut sq = instances::unit_square();
    sq.cells[0].constraints[1].c = int(-1);
    let r = reduce(&sq).unwrap();
    assert!(r.cells_hat.iter().all(Polyhedron::is_empty));
}

#[test]
fn identity_on_grid() {
    let q3 = instances::split_q3();
    let r = reduce(&q3).unwrap();
    assert_eq!(r.x1.dim(), 2);
    for a in -2..=2 {
        for b in -2..=2 {
            for t in -2..=2 {
                assert!(r.check_identity(&q3, &[int(a), int(b)], &[int(t)]).unwrap());
            }
        }
    }
}

#[test]
fn validation_report() {
    let abs = instances::abs_value();
    let rep = abs.validate();
    assert!(rep.is_canonical(), "{rep:?}");
    let mut bad = abs.clone();
    bad.cells[1].map.offset = vector(&[1]);
    assert_eq!(bad.validate().objective_conflicts, vec![(0, 1)]);
    assert!(bad.check().is_err());
}

#[test]
fn canonical_cells() {
    let mut abs = instances::abs_value();
    abs.cells.push(abs.cells[1].clone());
    let c = abs.canonicalize().unwrap();
    assert_eq!(c.m(), 2);
    assert!(c.validate().is_canonical());
}
