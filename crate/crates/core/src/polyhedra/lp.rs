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

//! Exact two-phase primal simplex with Bland's rule.
//!
//! Free variables are split into positive and negative parts; every row gets a
//! slack column and rows with a negative right-hand side an artificial column.
//! Strict rows are decided by maximizing a common slack `t <= 1` added to each of
//! them: the mixed system is feasible iff the optimal `t` is positive.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::Halfspace;
use crate::error::{Error, Result};
use crate::num::{self, Rational, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Infeasible,
    /// Maximum of the objective. With strict rows present `value` is the supremum
    /// and `point` a maximizer over the closure.
    Optimal { point: Vector, value: Rational },
    /// The objective is unbounded above; `point` is some feasible point.
    Unbounded { point: Vector },
    /// No objective was given; `point` satisfies every row.
    Feasible(Vector),
}

impl LpStatus {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpStatus::Infeasible)
    }

    pub fn point(&self) -> Option<&Vector> {
        match self {
            LpStatus::Infeasible => None,
            LpStatus::Optimal { point, .. }
            | LpStatus::Unbounded { point }
            | LpStatus::Feasible(point) => Some(point),
        }
    }
}

/// Decides feasibility of `rows` in `Q^dim` and, when `objective` is given,
/// maximizes it.
pub fn lp_feasible_optimal(
    dim: usize,
    rows: &[Halfspace],
    objective: Option<&[Rational]>,
) -> Result<LpStatus> {
    for r in rows {
        Error::check_dim(dim, r.dim())?;
    }
    if let Some(c) = objective {
        Error::check_dim(dim, c.len())?;
    }
    if rows.iter().all(|r| !r.strict) {
        return Ok(closed_lp(dim, rows, objective));
    }

    // max t  s.t.  a x <= b (non-strict),  a x + t <= b (strict),  t <= 1
    let mut lifted: Vec<(Vector, Rational)> = Vec::with_capacity(rows.len() + 1);
    for r in rows {
        let mut a = r.functional.clone();
        a.push(if r.strict { Rational::one() } else { Rational::zero() });
        lifted.push((a, r.bound.clone()));
    }
    lifted.push((num::unit(dim + 1, dim), Rational::one()));
    let obj = num::unit(dim + 1, dim);
    let witness = match maximize(dim + 1, &lifted, Some(&obj)) {
        Outcome::Optimal(x, t) if t.is_positive() => {
            let mut x = x;
            x.pop();
            x
        }
        _ => return Ok(LpStatus::Infeasible),
    };
    let Some(c) = objective else {
        return Ok(LpStatus::Feasible(witness));
    };
    let closed: Vec<Halfspace> = rows.iter().map(Halfspace::closed).collect();
    Ok(match closed_lp(dim, &closed, Some(c)) {
        LpStatus::Unbounded { .. } => LpStatus::Unbounded { point: witness },
        other => other,
    })
}

fn closed_lp(dim: usize, rows: &[Halfspace], objective: Option<&[Rational]>) -> LpStatus {
    let system: Vec<(Vector, Rational)> =
        rows.iter().map(|r| (r.functional.clone(), r.bound.clone())).collect();
    match maximize(dim, &system, objective) {
        Outcome::Infeasible => LpStatus::Infeasible,
        Outcome::Unbounded(point) => LpStatus::Unbounded { point },
        Outcome::Optimal(point, value) => match objective {
            Some(_) => LpStatus::Optimal { point, value },
            None => LpStatus::Feasible(point),
        },
    }
}

enum Outcome {
    Infeasible,
    Unbounded(Vector),
    Optimal(Vector, Rational),
}

struct Tableau {
    /// Constraint rows; the last entry of each row is the right-hand side.
    rows: Vec<Vector>,
    basis: Vec<usize>,
    /// Reduced costs; the last entry is minus the current objective value.
    cost: Vector,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        if !inv.is_one() {
            for v in self.rows[r].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
        }
        let pivot_row = core::mem::take(&mut self.rows[r]);
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for (v, p) in self.cost.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Installs the cost vector `c` (maximize `c . x`) in reduced form.
    fn set_objective(&mut self, c: &[Rational]) {
        let mut cost: Vector = c.iter().map(|v| -v).collect();
        cost.push(Rational::zero());
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = &c[b];
            if cb.is_zero() {
                continue;
            }
            for (v, a) in cost.iter_mut().zip(row) {
                if !a.is_zero() {
                    *v += cb * a;
                }
            }
        }
        self.cost = cost;
    }

    /// Runs simplex iterations over the columns allowed by `active`. Returns `false`
    /// when the objective is unbounded.
    fn run(&mut self, active: &[bool]) -> bool {
        let rhs = self.ncols;
        loop {
            let Some(c) = (0..self.ncols).find(|&j| active[j] && self.cost[j].is_negative())
            else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }

    fn value_of(&self, col: usize) -> Rational {
        self.basis
            .iter()
            .position(|&b| b == col)
            .map_or_else(Rational::zero, |r| self.rows[r][self.ncols].clone())
    }
}

/// max `c . x` s.t. `a_i . x <= b_i`, `x` free in `Q^n`.
fn maximize(n: usize, system: &[(Vector, Rational)], objective: Option<&[Rational]>) -> Outcome {
    let m = system.len();
    let n_art = system.iter().filter(|(_, b)| b.is_negative()).count();
    let ncols = 2 * n + m + n_art;
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut art = 0;
    for (i, (a, b)) in system.iter().enumerate() {
        let mut row = num::zeros(ncols + 1);
        let flip = b.is_negative();
        for j in 0..n {
            let v = if flip { -a[j].clone() } else { a[j].clone() };
            row[n + j] = -v.clone();
            row[j] = v;
        }
        row[2 * n + i] = if flip { -Rational::one() } else { Rational::one() };
        row[ncols] = if flip { -b.clone() } else { b.clone() };
        if flip {
            let col = 2 * n + m + art;
            row[col] = Rational::one();
            basis.push(col);
            art += 1;
        } else {
            basis.push(2 * n + i);
        }
        rows.push(row);
    }
    let mut tab = Tableau { rows, basis, cost: num::zeros(ncols + 1), ncols };
    let mut active = alloc::vec![true; ncols];

    if n_art > 0 {
        let mut phase1 = num::zeros(ncols);
        for v in phase1.iter_mut().skip(2 * n + m) {
            *v = -Rational::one();
        }
        tab.set_objective(&phase1);
        tab.run(&active);
        if tab.cost[ncols].is_negative() {
            return Outcome::Infeasible;
        }
        // Drive remaining (zero-level) artificials out of the basis.
        let mut r = 0;
        while r < tab.rows.len() {
            if tab.basis[r] >= 2 * n + m {
                match (0..2 * n + m).find(|&j| !tab.rows[r][j].is_zero()) {
                    Some(c) => {
                        tab.pivot(r, c);
                        r += 1;
                    }
                    None => {
                        tab.rows.remove(r);
                        tab.basis.remove(r);
                    }
                }
            } else {
                r += 1;
            }
        }
        for a in active.iter_mut().skip(2 * n + m) {
            *a = false;
        }
    }

    let mut full = num::zeros(ncols);
    if let Some(c) = objective {
        for j in 0..n {
            full[j] = c[j].clone();
            full[n + j] = -c[j].clone();
        }
    }
    tab.set_objective(&full);
    let bounded = tab.run(&active);
    let point: Vector = (0..n).map(|j| tab.value_of(j) - tab.value_of(n + j)).collect();
    if !bounded {
        return Outcome::Unbounded(point);
    }
    let value = match objective {
        Some(c) => num::dot(c, &point),
        None => Rational::zero(),
    };
    Outcome::Optimal(point, value)
}
