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


//! Brute-force ground truth: nondominance filtering of finite sets and grid classification.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::num::{self, Rational, Vector};
use crate::polyhedra::Cone;
use crate::reduction::PlpInstance;
use crate::solver::{PlpSolution, SolutionKind};

/// Indices of the points of `points` that are (weakly) nondominated with respect to `c`.
pub fn nondominated(points: &[Vector], c: &Cone, kind: SolutionKind) -> Result<Vec<usize>> {
    let weak = kind == SolutionKind::WeakPareto;
    if weak && !c.has_interior() {
        return Err(Error::EmptyConeInterior);
    }
    for v in points {
        Error::check_dim(c.dim(), v.len())?;
    }
    let interior = c.interior();
    let dominates = |v: &Vector, w: &Vector, strict: bool| -> bool {
        if v == w {
            return false;
        }
        let d = num::sub(w, v);
        if strict {
            interior.contains(&d)
        } else {
            c.contains(&d)
        }
    };
    let mut keep = Vec::new();
    if !c.is_pointed() {
        for (i, w) in points.iter().enumerate() {
            if !points.iter().any(|v| dominates(v, w, weak)) {
                keep.push(i);
            }
        }
        return Ok(keep);
    }
    // `v` dominates `w` only if `φ(v) < φ(w)`, and every dominated point is dominated by a minimal one
    let mut phi = num::zeros(c.dim());
    for row in c.polyhedron().rows() {
        phi = num::sub(&phi, &row.functional);
    }
    let mut order: Vec<(Rational, usize)> = points.iter().enumerate().map(|(i, v)| (num::dot(&phi, v), i)).collect();
    order.sort();
    let mut front: Vec<usize> = Vec::new();
    for &(_, i) in &order {
        let w = &points[i];
        let minimal = !front.iter().any(|&j| dominates(&points[j], w, false));
        if minimal {
            front.push(i);
            keep.push(i);
        } else if weak && !front.iter().any(|&j| dominates(&points[j], w, true)) {
            keep.push(i);
        }
    }
    keep.sort_unstable();
    Ok(keep)
}

/// A rational grid `lo + k / denominator` inside a box.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridSpec {
    pub lo: Vector,
    pub hi: Vector,
    pub denominator: u32,
}

impl GridSpec {
    pub fn new(lo: Vector, hi: Vector, denominator: u32) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch { expected: lo.len(), found: hi.len() });
        }
        if denominator == 0 {
            return Err(Error::InvalidGrid("denominator must be at least 1".to_string()));
        }
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(Error::InvalidGrid("empty box".to_string()));
        }
        Ok(Self { lo, hi, denominator })
    }

    /// Bounding box of the feasible cells widened by one, unbounded sides cut at `±2`.
    pub fn for_instance(inst: &PlpInstance, denominator: u32) -> Result<Self> {
        let p = inst.p();
        let mut lo: Vec<Option<Rational>> = alloc::vec![None; p];
        let mut hi: Vec<Option<Rational>> = alloc::vec![None; p];
        let cap = Rational::from_integer(2.into());
        for a in inst.feasible_cells() {
            if a.is_empty() {
                continue;
            }
            for (j, (l, h)) in a.bounding_box()?.into_iter().enumerate() {
                let l = l.unwrap_or_else(|| -cap.clone());
                let h = h.unwrap_or_else(|| cap.clone());
                lo[j] = Some(lo[j].take().map_or(l.clone(), |v| v.min(l)));
                hi[j] = Some(hi[j].take().map_or(h.clone(), |v| v.max(h)));
            }
        }
        let one = Rational::one();
        let step = Rational::new(1.into(), denominator.into());
        let snap = |v: Rational, up: bool| -> Rational {
            let k = &v / &step;
            (if up { k.ceil() } else { k.floor() }) * &step
        };
        let lo = lo.into_iter().map(|v| snap(v.unwrap_or_else(Rational::zero) - &one, false)).collect();
        let hi = hi.into_iter().map(|v| snap(v.unwrap_or_else(Rational::zero) + &one, true)).collect();
        Self::new(lo, hi, denominator)
    }

    /// The same grid restricted to `[-radius, radius]` on every axis.
    pub fn clamped(&self, radius: &Rational) -> Result<Self> {
        let lo: Vector = self.lo.iter().map(|v| v.max(&-radius).clone()).collect();
        let hi: Vector = self.hi.iter().map(|v| v.min(radius).clone()).collect();
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(Error::InvalidGrid("clamped box is empty".to_string()));
        }
        Self::new(lo, hi, self.denominator)
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    fn counts(&self) -> Vec<usize> {
        let d = Rational::from_integer(self.denominator.into());
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(l, h)| ((h - l) * &d).floor().to_integer().try_into().unwrap_or(usize::MAX) + 1)
            .collect()
    }

    pub fn len(&self) -> usize {
        self.counts().iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All grid points in lexicographic order.
    pub fn points(&self) -> Vec<Vector> {
        let counts = self.counts();
        let step = Rational::new(1.into(), self.denominator.into());
        let mut out = Vec::with_capacity(self.len());
        let mut idx = alloc::vec![0usize; self.dim()];
        loop {
            out.push(
                idx.iter()
                    .zip(&self.lo)
                    .map(|(&k, l)| l + &step * Rational::from_integer(k.into()))
                    .collect(),
            );
            let mut j = self.dim();
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                idx[j] += 1;
                if idx[j] < counts[j] {
                    break;
                }
                idx[j] = 0;
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Infeasible,
    /// No other grid value is `C`-below.
    Pareto,
    /// Dominated, but not by an `int(C)` margin.
    WeakOnly,
    /// Some grid value is `int(C)`-below.
    Dominated,
}

/// `f(x)` if `x` is feasible, from the first cell containing it.
pub fn feasible_value(inst: &PlpInstance, x: &[Rational]) -> Option<Vector> {
    let cell = inst.cells().iter().find(|c| c.domain.contains(x))?;
    if cell.constraints.iter().any(|k| num::dot(&k.xstar, x) > k.c) {
        return None;
    }
    Some(cell.map.apply(x))
}

/// Labels of every grid point, in the order of [`GridSpec::points`].
pub fn classify_grid(inst: &PlpInstance, grid: &GridSpec) -> Result<Vec<(Vector, Label)>> {
    Error::check_dim(inst.p(), grid.dim())?;
    let points = grid.points();
    let mut values: BTreeMap<Vector, usize> = BTreeMap::new();
    let mut slot = Vec::with_capacity(points.len());
    for x in &points {
        slot.push(feasible_value(inst, x).map(|y| {
            let n = values.len();
            *values.entry(y).or_insert(n)
        }));
    }
    let mut distinct: Vec<Vector> = alloc::vec![Vec::new(); values.len()];
    for (y, k) in values {
        distinct[k] = y;
    }
    let mut label = alloc::vec![Label::Dominated; distinct.len()];
    let cone = inst.cone();
    if cone.has_interior() {
        for k in nondominated(&distinct, cone, SolutionKind::WeakPareto)? {
            label[k] = Label::WeakOnly;
        }
    } else {
        label.iter_mut().for_each(|l| *l = Label::WeakOnly);
    }
    for k in nondominated(&distinct, cone, SolutionKind::Pareto)? {
        label[k] = Label::Pareto;
    }
    Ok(points.into_iter().zip(slot).map(|(x, s)| (x, s.map_or(Label::Infeasible, |k| label[k]))).collect())
}

/// Disagreements between computed sets and grid labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AgreementReport {
    pub points: usize,
    pub feasible: usize,
    /// Points in `S` that some grid point dominates.
    pub pareto_violations: Vec<Vector>,
    /// Points in `S^w` that some grid point strictly dominates.
    pub weak_violations: Vec<Vector>,
    /// Infeasible points reported as solutions.
    pub infeasible_members: Vec<Vector>,
}

impl AgreementReport {
    pub fn agrees(&self) -> bool {
        self.pareto_violations.is_empty() && self.weak_violations.is_empty() && self.infeasible_members.is_empty()
    }
}

pub fn check_agreement(
    labels: &[(Vector, Label)],
    pareto: Option<&PlpSolution>,
    weak: Option<&PlpSolution>,
) -> AgreementReport {
    let mut report = AgreementReport { points: labels.len(), ..Default::default() };
    for (x, label) in labels {
        let in_s = pareto.is_some_and(|s| s.contains_solution(x));
        let in_w = weak.is_some_and(|s| s.contains_solution(x));
        match label {
            Label::Infeasible => {
                if in_s || in_w {
                    report.infeasible_members.push(x.clone());
                }
                continue;
            }
            Label::WeakOnly if in_s => report.pareto_violations.push(x.clone()),
            Label::Dominated => {
                if in_s {
                    report.pareto_violations.push(x.clone());
                }
                if in_w {
                    report.weak_violations.push(x.clone());
                }
            }
            _ => {}
        }
        report.feasible += 1;
    }
    report
}

#[cfg(test)]
mod tests;
