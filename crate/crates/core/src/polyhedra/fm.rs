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

//! Fourier–Motzkin projection.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::{Halfspace, Polyhedron};
use crate::num::{self, Rational};

/// Row count above which eliminated systems are pruned by LP.
const PRUNE_THRESHOLD: usize = 6;

impl Polyhedron {
    /// Image under the coordinate projection onto `keep` (in that order).
    pub fn project(&self, keep: &[usize]) -> Polyhedron {
        let n = self.dim();
        let mut drop: Vec<usize> = (0..n).filter(|j| !keep.contains(j)).collect();
        let mut rows = self.canonicalize().into_rows();
        while !drop.is_empty() {
            if is_contradiction(&rows) {
                return Polyhedron::empty(keep.len());
            }
            let pos = choose_variable(&rows, &drop);
            let k = drop.remove(pos);
            rows = eliminate(rows, k);
            let p = Polyhedron::new(n, rows).expect("dimension preserved").canonicalize();
            let p = if p.rows().len() > PRUNE_THRESHOLD { p.remove_redundant() } else { p };
            rows = p.into_rows();
        }
        let rows = rows
            .into_iter()
            .map(|r| Halfspace {
                functional: keep.iter().map(|&j| r.functional[j].clone()).collect(),
                bound: r.bound,
                strict: r.strict,
            })
            .collect();
        Polyhedron::new(keep.len(), rows).expect("projected rows").canonicalize()
    }

    /// Projects away the coordinates in `vars`.
    pub fn eliminate(&self, vars: &[usize]) -> Polyhedron {
        let keep: Vec<usize> = (0..self.dim()).filter(|j| !vars.contains(j)).collect();
        self.project(&keep)
    }
}

fn is_contradiction(rows: &[Halfspace]) -> bool {
    rows.len() == 1 && rows[0].is_trivial()
}

/// Prefers variables fixed by an equality pair, then the smallest FM product.
fn choose_variable(rows: &[Halfspace], vars: &[usize]) -> usize {
    if let Some(pos) = vars.iter().position(|&k| equality_row(rows, k).is_some()) {
        return pos;
    }
    let cost = |k: usize| {
        let p = rows.iter().filter(|r| r.functional[k].is_positive()).count();
        let m = rows.iter().filter(|r| r.functional[k].is_negative()).count();
        p * m
    };
    let mut best = 0;
    for pos in 1..vars.len() {
        if cost(vars[pos]) < cost(vars[best]) {
            best = pos;
        }
    }
    best
}

/// A non-strict row whose reverse is also present and which involves `k`. Rows are
/// expected in normalized form.
fn equality_row(rows: &[Halfspace], k: usize) -> Option<usize> {
    rows.iter().enumerate().position(|(i, r)| {
        !r.strict
            && !r.functional[k].is_zero()
            && rows.iter().enumerate().any(|(j, s)| {
                j != i && !s.strict && s.bound == -r.bound.clone() && s.functional == num::neg(&r.functional)
            })
    })
}

fn eliminate(rows: Vec<Halfspace>, k: usize) -> Vec<Halfspace> {
    if let Some(e) = equality_row(&rows, k) {
        return substitute(rows, e, k);
    }
    let mut out = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for r in rows {
        let c = &r.functional[k];
        if c.is_zero() {
            out.push(r);
        } else if c.is_positive() {
            pos.push(r);
        } else {
            neg.push(r);
        }
    }
    for p in &pos {
        for n in &neg {
            let lp = -n.functional[k].clone();
            let ln = p.functional[k].clone();
            let mut functional: Vec<Rational> = p
                .functional
                .iter()
                .zip(&n.functional)
                .map(|(a, b)| a * &lp + b * &ln)
                .collect();
            functional[k] = Rational::zero();
            out.push(Halfspace {
                functional,
                bound: &p.bound * &lp + &n.bound * &ln,
                strict: p.strict || n.strict,
            });
        }
    }
    out
}

/// Solves row `e` (an equality) for `x_k` and substitutes into every other row.
fn substitute(rows: Vec<Halfspace>, e: usize, k: usize) -> Vec<Halfspace> {
    let eq = rows[e].clone();
    let ck = eq.functional[k].clone();
    rows.into_iter()
        .filter(|r| {
            !(r.functional == eq.functional && r.bound == eq.bound && !r.strict)
                && !(r.functional == num::neg(&eq.functional) && r.bound == -eq.bound.clone() && !r.strict)
        })
        .map(|r| {
            let c = r.functional[k].clone();
            if c.is_zero() {
                return r;
            }
            let f = &c / &ck;
            let mut functional = num::axpy(&r.functional, &-f.clone(), &eq.functional);
            functional[k] = Rational::zero();
            Halfspace { functional, bound: &r.bound - &f * &eq.bound, strict: r.strict }
        })
        .collect()
}
