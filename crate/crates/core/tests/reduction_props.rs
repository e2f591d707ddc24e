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
use plvo_core::linalg;
use plvo_core::num::{self, int, Vector};
use plvo_core::reduction::reduce;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bases_are_dual_and_complementary(seed in any::<u64>()) {
        let inst = random_instance_with(&mut rng(seed), 3);
        let (p, q) = (inst.p(), inst.q());
        let r = reduce(&inst).unwrap();
        for (i, e) in r.dual_basis.iter().enumerate() {
            for (j, h) in r.h.iter().enumerate() {
                prop_assert_eq!(num::dot(e, h), int(i64::from(i == j)));
            }
        }
        let mut stacked: Vec<Vector> = r.x1.basis().to_vec();
        stacked.extend(r.h.iter().cloned());
        prop_assert_eq!(linalg::rank(p, &stacked), p);
        let mut values: Vec<Vector> = r.t_hat_image.basis().to_vec();
        values.extend(r.z.iter().cloned());
        prop_assert_eq!(linalg::rank(q, &values), values.len());
        for u in r.x1.basis() {
            for c in inst.cells() {
                prop_assert!(c.domain.rows().iter().all(|row| num::dot(&row.functional, u) == int(0)));
                prop_assert!(c.constraints.iter().all(|k| num::dot(&k.xstar, u) == int(0)));
            }
        }
    }

    #[test]
    fn feasible_cells_are_x1_plus_reduced(seed in any::<u64>()) {
        let inst = random_instance_with(&mut rng(seed), 3);
        let r = reduce(&inst).unwrap();
        for (i, ahat) in r.cells_hat.iter().enumerate() {
            let a = inst.feasible_cell(i).unwrap();
            let lifted = r.lift_solution(inst.p(), ahat).unwrap();
            prop_assert!(lifted.set_eq(&a).unwrap());
            if !ahat.is_empty() {
                let x2 = r.x2_embedding(inst.p()).apply(&ahat.relative_interior_point().unwrap());
                prop_assert!(a.contains(&x2));
                for u in r.x1.basis() {
                    prop_assert!(a.contains(&num::add(&x2, u)));
                }
            }
        }
    }

    #[test]
    fn value_identity(seed in any::<u64>()) {
        let inst = random_instance_with(&mut rng(seed), 3);
        let r = reduce(&inst).unwrap();
        let pts = grid_points(r.x1.dim() + r.nu(), -2, 2, 1);
        for g in pts.iter().step_by(7) {
            let (a, t) = g.split_at(r.x1.dim());
            prop_assert!(r.check_identity(&inst, a, t).unwrap());
        }
    }
}
