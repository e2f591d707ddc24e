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


mod common;

use common::*;
use plvo_core::num::{self, ratio, Vector};
use plvo_core::polyhedra::{refine_partition, Halfspace, Polyhedron, Subspace};
use proptest::prelude::*;
use rand::Rng;

fn polytope(seed: u64, dim: usize) -> Polyhedron {
    let mut rng = rng(seed);
    let rows = rng.gen_range(dim + 1..=dim + 3);
    full_dim_polyhedron(&mut rng, dim, rows)
        .meet(&Polyhedron::boxed(&num::vector(&vec![-3; dim]), &num::vector(&vec![3; dim])))
        .unwrap()
}

fn any_polyhedron(seed: u64, dim: usize) -> Polyhedron {
    let mut rng = rng(seed);
    let support: Vec<usize> = (0..dim).collect();
    let n = rng.gen_range(1..=5);
    let mut rows = Vec::new();
    for _ in 0..n {
        let a = vec_on(&mut rng, dim, &support);
        let b = coef(&mut rng);
        if rng.gen_bool(0.2) {
            rows.push(Halfspace::le(num::neg(&a), -b.clone()));
        }
        rows.push(Halfspace::le(a, b));
    }
    Polyhedron::new(dim, rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn prime_generator_rows_are_needed(seed in any::<u64>(), dim in 1usize..=3) {
        let p = any_polyhedron(seed, dim);
        if let Ok(g) = p.prime_generator_group() {
            prop_assert!(g.set_eq(&p).unwrap());
            for i in 0..g.rows().len() {
                let mut others: Vec<Halfspace> = g.rows().to_vec();
                let row = others.remove(i);
                let witness = Polyhedron::new(dim, others).unwrap().with_row(row.complement());
                prop_assert!(!witness.is_empty(), "row {} of {} is redundant", i, g);
            }
        }
    }

    #[test]
    fn interior_iff_some_open_facet(seed in any::<u64>(), dim in 1usize..=3) {
        let p = any_polyhedron(seed, dim);
        let Ok(g) = p.prime_generator_group() else { return Ok(()) };
        let facet = |j: usize| {
            let rows = g
                .rows()
                .iter()
                .enumerate()
                .flat_map(|(k, r)| if k == j { vec![r.clone(), r.reversed()] } else { vec![r.opened()] })
                .collect();
            !Polyhedron::new(dim, rows).unwrap().is_empty()
        };
        let open: Vec<bool> = (0..g.rows().len()).map(facet).collect();
        if g.has_interior() {
            prop_assert!(open.iter().all(|&b| b));
        }
        if open.iter().any(|&b| b) {
            prop_assert!(g.has_interior());
        }
    }

    #[test]
    fn split_along_lineality(seed in any::<u64>()) {
        // rows ignore x3, so span{e3} is in the lineality space
        let base = polytope(seed, 2);
        let p = Polyhedron::new(3, base.rows().iter().map(|r| {
            Halfspace { functional: num::concat(&r.functional, &num::vector(&[0])), ..r.clone() }
        }).collect()).unwrap();
        let z1 = Subspace::span(3, &[num::vector(&[0, 0, 1])]).unwrap();
        let z2 = z1.coordinate_complement();
        let hat = p.decompose_along(&z1, &z2).unwrap();
        let lifted = hat.image(&z2.matrix(), &num::zeros(3)).unwrap().plus_subspace(&z1).unwrap();
        prop_assert!(lifted.set_eq(&p).unwrap());
    }

    #[test]
    fn polytope_in_a_face_lies_in_one_face(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let p = polytope(seed, 2).remove_redundant();
        let faces = p.enumerate_exposed_faces().unwrap();
        let (_, f) = &faces[pick.index(faces.len())];
        let x = f.relative_interior_point().unwrap();
        let r = ratio(1, 8);
        let lo: Vector = x.iter().map(|v| v - &r).collect();
        let hi: Vector = x.iter().map(|v| v + &r).collect();
        let c = f.meet(&Polyhedron::boxed(&lo, &hi)).unwrap();
        let holders = faces.iter().filter(|(_, g)| c.is_subset_of(g).unwrap()).count();
        prop_assert!(holders >= 1);
        let cert = p.minimal_face_containing(&c).unwrap();
        prop_assert!(cert.face_of(&p).set_eq(f).unwrap());
    }

    #[test]
    fn refinement_partitions_the_union(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rng.gen_range(1..=3);
        let family: Vec<Polyhedron> = (0..n).map(|_| full_dim_polyhedron(&mut rng, 2, 3)).collect();
        let out = refine_partition(&family).unwrap();
        for q in &out {
            prop_assert!(q.has_interior());
        }
        for (a, qa) in out.iter().enumerate() {
            for (b, qb) in out.iter().enumerate() {
                prop_assert!(a == b || !qa.meets(&qb.relative_interior().unwrap()).unwrap());
            }
        }
        for x in grid_points(2, -3, 3, 2) {
            prop_assert_eq!(family.iter().any(|p| p.contains(&x)), out.iter().any(|p| p.contains(&x)));
        }
    }

    #[test]
    fn minkowski_sum_laws(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (pa, pb, pc) = (polytope(a, 2), polytope(b, 2), polytope(c, 2));
        let ab = pa.minkowski_sum(&pb).unwrap();
        prop_assert!(ab.set_eq(&pb.minkowski_sum(&pa).unwrap()).unwrap());
        let left = ab.minkowski_sum(&pc).unwrap();
        let right = pa.minkowski_sum(&pb.minkowski_sum(&pc).unwrap()).unwrap();
        prop_assert!(left.set_eq(&right).unwrap());
    }

    #[test]
    fn projection_order_is_irrelevant(seed in any::<u64>()) {
        let p = polytope(seed, 3);
        let both = p.eliminate(&[0, 1]);
        // indices shift once a coordinate is gone
        let first = p.eliminate(&[0]).eliminate(&[0]);
        let second = p.eliminate(&[1]).eliminate(&[0]);
        prop_assert!(both.set_eq(&first).unwrap());
        prop_assert!(both.set_eq(&second).unwrap());
    }
}
