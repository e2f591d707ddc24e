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
use crate::num::{int, ratio, vector};
use crate::solver::{solve_pareto, solve_weak};

fn pairwise(points: &[Vector], c: &Cone, strict: bool) -> Vec<usize> {
    let int = c.interior();
    (0..points.len())
        .filter(|&i| {
            !points.iter().any(|v| {
                let d = num::sub(&points[i], v);
                v != &points[i] && if strict { int.contains(&d) } else { c.contains(&d) }
            })
        })
        .collect()
}

#[test]
fn nondominated_examples() {
    let c = Cone::orthant(2);
    let pts = vec![vector(&[0, 1]), vector(&[1, 0]), vector(&[1, 1])];
    assert_eq!(nondominated(&pts, &c, SolutionKind::Pareto).unwrap(), vec![0, 1]);
    assert_eq!(nondominated(&pts[..1], &c, SolutionKind::Pareto).unwrap(), vec![0]);
    let pts = vec![vector(&[0, 0]), vector(&[0, 1])];
    assert_eq!(nondominated(&pts, &c, SolutionKind::WeakPareto).unwrap(), vec![0, 1]);
    assert_eq!(nondominated(&pts, &c, SolutionKind::Pareto).unwrap(), vec![0]);
    let ray = Cone::from_functionals(2, vec![vector(&[0, 1]), vector(&[0, -1]), vector(&[-1, 0])]).unwrap();
    assert_eq!(nondominated(&pts, &ray, SolutionKind::WeakPareto), Err(Error::EmptyConeInterior));
}

#[test]
fn fast_path_matches_pairwise() {
    let cones = [
        Cone::orthant(2),
        Cone::from_functionals(2, vec![vector(&[-1, -1]), vector(&[1, -3])]).unwrap(),
        Cone::from_functionals(2, vec![vector(&[0, -1])]).unwrap(),
    ];
    let mut pts = Vec::new();
    for a in -2i64..=2 {
        for b in -2..=2 {
            if (a * 3 + b * 7).rem_euclid(4) < 2 {
                pts.push(vector(&[a, b]));
            }
        }
    }
    pts.push(vector(&[0, 0]));
    for c in &cones {
        assert_eq!(nondominated(&pts, c, SolutionKind::Pareto).unwrap(), pairwise(&pts, c, false));
        assert_eq!(nondominated(&pts, c, SolutionKind::WeakPareto).unwrap(), pairwise(&pts, c, true));
    }
}

#[test]
fn grid_spec() {
    let g = GridSpec::new(vector(&[-1]), vector(&[1]), 2).unwrap();
    assert_eq!(g.points(), vec![vector(&[-1]), vec![ratio(-1, 2)], vector(&[0]), vec![ratio(1, 2)], vector(&[1])]);
    assert!(GridSpec::new(vector(&[1]), vector(&[0]), 1).is_err());
    assert!(GridSpec::new(vector(&[0]), vector(&[1]), 0).is_err());
    let g = GridSpec::for_instance(&instances::unit_square(), 4).unwrap();
    assert_eq!((g.lo.clone(), g.hi.clone()), (vector(&[-1, -1]), vector(&[2, 2])));
    assert_eq!(g.len(), 13 * 13);
    let g = GridSpec::for_instance(&instances::abs_value(), 4).unwrap();
    assert_eq!((g.lo, g.hi), (vector(&[-3]), vector(&[2])));
}

#[test]
fn abs_value_grid() {
    let inst = instances::abs_value();
    let grid = GridSpec::new(vector(&[-2]), vector(&[2]), 4).unwrap();
    let labels = classify_grid(&inst, &grid).unwrap();
    let pareto: Vec<&Vector> = labels.iter().filter(|(_, l)| *l == Label::Pareto).map(|(x, _)| x).collect();
    assert_eq!(pareto, vec![&vector(&[0])]);
    assert!(labels.iter().all(|(x, l)| (*l == Label::Infeasible) == (x[0] > int(1))));
    let s = solve_pareto(&inst).unwrap();
    let w = solve_weak(&inst).unwrap();
    assert!(check_agreement(&labels, Some(&s), Some(&w)).agrees());
}

#[test]
fn square_grid() {
    let inst = instances::unit_square();
    let grid = GridSpec::for_instance(&inst, 4).unwrap();
    let labels = classify_grid(&inst, &grid).unwrap();
    for (x, l) in &labels {
        let feasible = x.iter().all(|v| *v >= int(0) && *v <= int(1));
        let edge = x.iter().any(|v| *v == int(0));
        let expected = match (feasible, edge, x == &vector(&[0, 0])) {
            (false, _, _) => Label::Infeasible,
            (true, _, true) => Label::Pareto,
            (true, true, false) => Label::WeakOnly,
            _ => Label::Dominated,
        };
        assert_eq!(*l, expected, "{x:?}");
    }
    let report = check_agreement(&labels, Some(&solve_pareto(&inst).unwrap()), Some(&solve_weak(&inst).unwrap()));
    assert!(report.agrees());
    assert_eq!(report.feasible, 25);
}

#[test]
fn infeasible_instance() {
    use crate::pwl::AffineMap;
    use crate::reduction::{Constraint, PlpCell};
    let cell = PlpCell {
        domain: crate::polyhedra::Polyhedron::whole(1),
        map: AffineMap::linear(crate::linalg::Matrix::identity(1)),
        constraints: vec![
            Constraint { xstar: vector(&[1]), c: int(-1) },
            Constraint { xstar: vector(&[-1]), c: int(-1) },
        ],
    };
    let inst = PlpInstance::new(1, 1, 2, vec![cell], Cone::orthant(1)).unwrap();
    let grid = GridSpec::new(vector(&[-2]), vector(&[2]), 4).unwrap();
    assert!(classify_grid(&inst, &grid).unwrap().iter().all(|(_, l)| *l == Label::Infeasible));
    assert!(solve_weak(&inst).unwrap().solution_set.is_empty());
    assert!(solve_pareto(&inst).unwrap().solution_set.is_empty());
}
