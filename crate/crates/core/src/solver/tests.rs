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
use alloc::vec::Vec;

use super::*;
use crate::instances;
use crate::linalg::Matrix;
use crate::num::{int, ratio, vector, Rational};
use crate::pwl::AffineMap;
use crate::reduction::{Constraint, PlpCell};

fn region(dim: usize, pieces: Vec<Polyhedron>) -> Region {
    Region::new(dim, pieces).unwrap()
}

fn same(set: &EfficientSet, dim: usize, expected: Vec<Polyhedron>) -> bool {
    set.region(dim).set_eq(&region(dim, expected)).unwrap()
}

fn constraint(xstar: &[i64], c: i64) -> Constraint {
    Constraint { xstar: vector(xstar), c: int(c) }
}

fn single(p: usize, t: Matrix, constraints: Vec<Constraint>, cone: Cone) -> PlpInstance {
    let q = t.nrows();
    let l = constraints.len();
    let cell = PlpCell { domain: Polyhedron::whole(p), map: AffineMap::linear(t), constraints };
    PlpInstance::new(p, q, l, vec![cell], cone).unwrap()
}

fn lower_left_edges() -> Vec<Polyhedron> {
    vec![
        Polyhedron::from_i64(2, &[(&[1, 0], 0), (&[-1, 0], 0), (&[0, -1], 0), (&[0, 1], 1)]),
        Polyhedron::from_i64(2, &[(&[0, 1], 0), (&[0, -1], 0), (&[-1, 0], 0), (&[1, 0], 1)]),
    ]
}

#[test]
fn abs_value() {
    let inst = instances::abs_value();
    let zero = vec![Polyhedron::point(&vector(&[0]))];
    let w = solve_weak(&inst).unwrap();
    assert_eq!(w.branch, Branch::None);
    assert!(same(&w.solution_set, 1, zero.clone()));
    assert!(same(&w.value_set, 1, zero.clone()));
    let s = solve_pareto(&inst).unwrap();
    assert!(same(&s.solution_set, 1, zero.clone()));
    assert!(same(&s.value_set, 1, zero));
    assert!(!s.contains_solution(&[ratio(1, 4)]));
}

#[test]
fn unit_square() {
    let inst = instances::unit_square();
    let s = solve_pareto(&inst).unwrap();
    assert!(same(&s.solution_set, 2, vec![Polyhedron::point(&vector(&[0, 0]))]));
    let w = solve_weak(&inst).unwrap();
    assert!(same(&w.solution_set, 2, lower_left_edges()));
    assert!(same(&w.value_set, 2, lower_left_edges()));
}

#[test]
fn certificates_are_faces() {
    for (_, inst) in instances::all() {
        for sol in [solve_weak(&inst).unwrap(), solve_pareto(&inst).unwrap()] {
            for m in &sol.solution_set.members {
                let a = inst.feasible_cell(m.source).unwrap();
                assert!(m.face.is_valid_for(&a));
                assert!(m.set.is_subset_of(&m.face.face_of(&a)).unwrap());
            }
            for m in &sol.value_set.members {
                let b = &sol.value_parents[m.source];
                assert!(m.face.is_valid_for(b));
                assert!(m.set.is_subset_of(&m.face.face_of(b)).unwrap());
            }
        }
    }
}

#[test]
fn reduced_lift_matches_skip() {
    for (_, inst) in instances::all() {
        for kind in [SolutionKind::Pareto, SolutionKind::WeakPareto] {
            let full = solve(&inst, kind, SolveOptions::default()).unwrap();
            let skip = solve(&inst, kind, SolveOptions { mode: ReductionMode::Skip, ..Default::default() }).unwrap();
            let p = inst.p();
            assert!(full.solution_set.region(p).set_eq(&skip.solution_set.region(p)).unwrap());
        }
    }
}

#[test]
fn q3_has_no_pareto_solution() {
    let inst = instances::split_q3();
    let s = solve_pareto(&inst).unwrap();
    assert_eq!(s.branch, Branch::NoPareto);
    assert!(s.solution_set.is_empty() && s.value_set.is_empty());
    assert!(s.per_subproblem.iter().all(|sp| sp.set.is_empty() && sp.branch == Branch::NoPareto));
    let w = solve_weak(&inst).unwrap();
    assert_eq!(w.branch, Branch::None);
    // x2 and x3 are free, so every value is strictly dominated
    assert!(w.solution_set.is_empty());
}

#[test]
fn unbounded_direction_kills_pareto() {
    // min (x1, x2) s.t. x2 >= 0: x1 has no lower bound
    let inst = single(2, Matrix::identity(2), vec![constraint(&[0, -1], 0)], Cone::orthant(2));
    let s = solve_pareto(&inst).unwrap();
    assert_eq!(s.branch, Branch::NoPareto);
    assert!(s.solution_set.is_empty());
    let w = solve_weak(&inst).unwrap();
    assert!(same(&w.solution_set, 2, vec![Polyhedron::from_i64(2, &[(&[0, 1], 0), (&[0, -1], 0)])]));
}

#[test]
fn interior_condition_fails() {
    // values on the anti-diagonal never strictly dominate each other
    let t = Matrix::from_i64(&[&[1], &[-1]]);
    let inst = single(1, t, vec![constraint(&[1], 1), constraint(&[-1], 1)], Cone::orthant(2));
    let a = vec![Polyhedron::from_i64(1, &[(&[1], 1), (&[-1], 1)])];
    let w = solve_weak(&inst).unwrap();
    assert_eq!(w.branch, Branch::AllFeasible);
    assert!(same(&w.solution_set, 1, a.clone()));
    let (_, sw) = solve_linear_subproblem(&inst, 0).unwrap();
    assert!(same(&sw, 1, a.clone()));
    let s = solve_pareto(&inst).unwrap();
    assert!(same(&s.solution_set, 1, a));

    let ray = Cone::from_functionals(2, vec![vector(&[-1, 0]), vector(&[0, 1]), vector(&[0, -1])]).unwrap();
    let inst = instances::unit_square().with_cone(ray).unwrap();
    let w = solve_weak(&inst).unwrap();
    assert_eq!(w.branch, Branch::AllFeasible);
    assert!(same(&w.solution_set, 2, vec![inst.feasible_cell(0).unwrap()]));
}

#[test]
fn linear_subproblems() {
    let inst = instances::unit_square();
    let (s, sw) = solve_linear_subproblem(&inst, 0).unwrap();
    assert!(same(&s, 2, vec![Polyhedron::point(&vector(&[0, 0]))]));
    assert!(same(&sw, 2, lower_left_edges()));
    let abs = instances::abs_value();
    let (s0, _) = solve_linear_subproblem(&abs, 0).unwrap();
    let (s1, _) = solve_linear_subproblem(&abs, 1).unwrap();
    assert!(same(&s0, 1, vec![Polyhedron::point(&vector(&[0]))]));
    assert!(same(&s1, 1, vec![Polyhedron::point(&vector(&[0]))]));
    assert!(solve_linear_subproblem(&abs, 2).is_err());
}

#[test]
fn scalarized_weak_matches() {
    for (_, inst) in instances::all() {
        let opts = SolveOptions { weak_method: WeakMethod::Scalarization, ..Default::default() };
        let a = solve_weak(&inst).unwrap();
        match solve(&inst, SolutionKind::WeakPareto, opts) {
            Ok(b) => assert!(a.solution_set.region(inst.p()).set_eq(&b.solution_set.region(inst.p())).unwrap()),
            Err(Error::NotConeConvex) => {}
            Err(e) => panic!("{e:?}"),
        }
    }
}

#[test]
fn value_points() {
    let inst = instances::unit_square();
    let images: Vec<Polyhedron> = (0..inst.m()).map(|i| inst.image(i).unwrap()).collect();
    let y: Vec<Rational> = vector(&[0, 1]);
    assert!(is_efficient_value(&y, &images, inst.cone(), SolutionKind::WeakPareto).unwrap());
    assert!(!is_efficient_value(&y, &images, inst.cone(), SolutionKind::Pareto).unwrap());
}
