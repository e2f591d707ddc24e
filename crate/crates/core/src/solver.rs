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

//! Pareto and weak Pareto solution and value sets of a problem instance.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::order::{self, EfficientPiece, EfficientSet};
use crate::polyhedra::{Cone, Polyhedron, Region};
use crate::reduction::{reduce_with, PlpInstance, ReducedProblem, ReductionMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolutionKind {
    Pareto,
    WeakPareto,
}

/// Which degenerate case, if any, decided the answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    None,
    /// `(T̂(X1) ⊕ Z) ∩ int(C)` is empty: every feasible point is weakly efficient.
    AllFeasible,
    /// `C ∩ T̂(X1) ≠ {0}`: there are no Pareto solutions.
    NoPareto,
}

/// Solution set of one linear sub-problem `min f_i` over `A_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subproblem {
    pub index: usize,
    pub branch: Branch,
    pub set: EfficientSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlpSolution {
    pub kind: SolutionKind,
    pub branch: Branch,
    /// Efficient values in `Y`; certificates refer to the rows of `value_parents`.
    pub value_set: EfficientSet,
    /// Per cell, the image `T̂(X1) + f̂(Â_i)` the value certificates point into.
    pub value_parents: Vec<Polyhedron>,
    /// Efficient points in `X`; certificates refer to the rows of `A_i`.
    pub solution_set: EfficientSet,
    /// `A_i` per cell.
    pub feasible_cells: Vec<Polyhedron>,
    pub per_subproblem: Vec<Subproblem>,
}

impl PlpSolution {
    pub fn contains_solution(&self, x: &[crate::num::Rational]) -> bool {
        let mut inside: Vec<Option<bool>> = alloc::vec![None; self.feasible_cells.len()];
        self.solution_set.members.iter().any(|m| {
            *inside[m.source].get_or_insert_with(|| self.feasible_cells[m.source].contains(x)) && m.set.contains(x)
        })
    }

    pub fn contains_value(&self, y: &[crate::num::Rational]) -> bool {
        self.value_set.contains(y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum WeakMethod {
    /// Set differences against `int(B_j + C)`.
    #[default]
    Difference,
    /// Supporting functionals of `conv(∪B_j) + C`; requires `C`-convexity.
    Scalarization,
}

/// Options for [`solve`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct SolveOptions {
    pub mode: ReductionMode,
    pub weak_method: WeakMethod,
}

pub fn solve_weak(inst: &PlpInstance) -> Result<PlpSolution> {
    solve(inst, SolutionKind::WeakPareto, SolveOptions::default())
}

pub fn solve_pareto(inst: &PlpInstance) -> Result<PlpSolution> {
    solve(inst, SolutionKind::Pareto, SolveOptions::default())
}

pub fn solve(inst: &PlpInstance, kind: SolutionKind, opts: SolveOptions) -> Result<PlpSolution> {
    let r = reduce_with(inst, opts.mode)?;
    Solver { inst, r: &r }.run(kind, opts.weak_method)
}

/// `(S_i, S_i^w)` for one cell.
pub fn solve_linear_subproblem(inst: &PlpInstance, i: usize) -> Result<(EfficientSet, EfficientSet)> {
    if i >= inst.m() {
        return Err(Error::NoSuchCell { index: i, count: inst.m() });
    }
    let r = reduce_with(inst, ReductionMode::Full)?;
    let s = Solver { inst, r: &r };
    let b = s.reduced_images()?;
    let (_, singles) = if r.t_hat_pointed {
        order::pareto_set_with_parts(&b, &r.c_z)?
    } else {
        (EfficientSet::default(), Vec::new())
    };
    let pareto = s.subproblem_pareto(i, &singles)?.set;
    let weak = s.subproblem_weak(i, &b)?.set;
    Ok((pareto, weak))
}

struct Solver<'a> {
    inst: &'a PlpInstance,
    r: &'a ReducedProblem,
}

impl Solver<'_> {
    fn run(&self, kind: SolutionKind, method: WeakMethod) -> Result<PlpSolution> {
        let b = self.reduced_images()?;
        let value_parents = b
            .iter()
            .map(|bi| self.r.lift_value(self.inst.q(), bi))
            .collect::<Result<Vec<_>>>()?;
        let mut sol = match kind {
            SolutionKind::WeakPareto => self.weak(b, value_parents, method)?,
            SolutionKind::Pareto => self.pareto(b, value_parents)?,
        };
        sol.solution_set.dedup_sets();
        sol.value_set.dedup_sets();
        Ok(sol)
    }

    /// `B_i = f̂_i(Â_i)` in `z` coordinates.
    fn reduced_images(&self) -> Result<Vec<Polyhedron>> {
        self.r
            .cells_hat
            .iter()
            .zip(&self.r.fhat)
            .map(|(a, f)| if a.is_empty() { Ok(Polyhedron::empty(self.r.sigma())) } else { f.image(a) })
            .collect()
    }

    fn live(&self) -> Vec<usize> {
        (0..self.inst.m()).filter(|&i| !self.r.cells_hat[i].is_empty()).collect()
    }

    /// `Â_i ∩ f̂_i⁻¹(piece)` for each piece, certified against `Â_i`, lifted to `X`.
    fn pull_back(&self, i: usize, pieces: &[Polyhedron], out: &mut EfficientSet) -> Result<()> {
        let a = &self.r.cells_hat[i];
        for v in pieces {
            let s = a.meet(&self.r.fhat[i].preimage(v)?)?.canonicalize();
            if s.is_empty() {
                continue;
            }
            let face = a.minimal_face_containing(&s)?;
            let set = self.r.lift_solution(self.inst.p(), &s)?;
            if !out.members.iter().any(|m| m.source == i && m.set == set) {
                out.members.push(EfficientPiece { set, source: i, face });
            }
        }
        Ok(())
    }

    fn lift_values(&self, reduced: &EfficientSet) -> Result<EfficientSet> {
        let mut out = EfficientSet::default();
        for m in &reduced.members {
            out.members.push(EfficientPiece {
                set: self.r.lift_value(self.inst.q(), &m.set)?,
                source: m.source,
                face: m.face.clone(),
            });
        }
        Ok(out)
    }

    /// Every nonempty `A_i` with its image, the answer when no point is strictly dominated.
    fn all_feasible(&self, kind: SolutionKind, b: &[Polyhedron], value_parents: Vec<Polyhedron>) -> Result<PlpSolution> {
        let mut solution_set = EfficientSet::default();
        let mut reduced_values = EfficientSet::default();
        for i in self.live() {
            self.pull_back(i, core::slice::from_ref(&Polyhedron::whole(self.r.sigma())), &mut solution_set)?;
            reduced_values.push_region(Region::from_polyhedron(b[i].clone()), i, &b[i])?;
        }
        let per_subproblem = solution_set
            .members
            .iter()
            .map(|m| Subproblem {
                index: m.source,
                branch: Branch::AllFeasible,
                set: EfficientSet { members: alloc::vec![m.clone()] },
            })
            .collect();
        Ok(PlpSolution {
            kind,
            branch: Branch::AllFeasible,
            value_set: self.lift_values(&reduced_values)?,
            value_parents,
            solution_set,
            feasible_cells: self.inst.feasible_cells(),
            per_subproblem,
        })
    }

    fn weak(&self, b: Vec<Polyhedron>, value_parents: Vec<Polyhedron>, method: WeakMethod) -> Result<PlpSolution> {
        if !self.r.int_nonempty {
            return self.all_feasible(SolutionKind::WeakPareto, &b, value_parents);
        }
        let v = match method {
            WeakMethod::Difference => order::weak_pareto_set(&b, &self.r.c_z)?,
            WeakMethod::Scalarization => order::scalarization_weak_pareto(&b, &self.r.c_z)?,
        };
        let mut solution_set = EfficientSet::default();
        for i in self.live() {
            let own: Vec<Polyhedron> =
                v.members.iter().filter(|m| m.source == i).map(|m| m.set.clone()).collect();
            self.pull_back(i, &own, &mut solution_set)?;
        }
        let per_subproblem = self.live().into_iter().map(|i| self.subproblem_weak(i, &b)).collect::<Result<_>>()?;
        Ok(PlpSolution {
            kind: SolutionKind::WeakPareto,
            branch: Branch::None,
            value_set: self.lift_values(&v)?,
            value_parents,
            solution_set,
            feasible_cells: self.inst.feasible_cells(),
            per_subproblem,
        })
    }

    fn pareto(&self, b: Vec<Polyhedron>, value_parents: Vec<Polyhedron>) -> Result<PlpSolution> {
        if !self.r.t_hat_pointed {
            let per_subproblem = self
                .live()
                .into_iter()
                .map(|index| Subproblem { index, branch: Branch::NoPareto, set: EfficientSet::default() })
                .collect();
            return Ok(PlpSolution {
                kind: SolutionKind::Pareto,
                branch: Branch::NoPareto,
                value_set: EfficientSet::default(),
                value_parents,
                solution_set: EfficientSet::default(),
                feasible_cells: self.inst.feasible_cells(),
                per_subproblem,
            });
        }
        let (e, singles) = order::pareto_set_with_parts(&b, &self.r.c_z)?;
        let all: Vec<Polyhedron> = e.members.iter().map(|m| m.set.clone()).collect();
        let mut solution_set = EfficientSet::default();
        for i in self.live() {
            self.pull_back(i, &all, &mut solution_set)?;
        }
        let per_subproblem =
            self.live().into_iter().map(|i| self.subproblem_pareto(i, &singles)).collect::<Result<_>>()?;
        Ok(PlpSolution {
            kind: SolutionKind::Pareto,
            branch: Branch::None,
            value_set: self.lift_values(&e)?,
            value_parents,
            solution_set,
            feasible_cells: self.inst.feasible_cells(),
            per_subproblem,
        })
    }

    fn subproblem_pareto(&self, i: usize, singles: &[Region]) -> Result<Subproblem> {
        let mut set = EfficientSet::default();
        if !self.r.t_hat_pointed {
            return Ok(Subproblem { index: i, branch: Branch::NoPareto, set });
        }
        if let Some(region) = singles.get(i) {
            self.pull_back(i, region.pieces(), &mut set)?;
        }
        Ok(Subproblem { index: i, branch: Branch::None, set })
    }

    fn subproblem_weak(&self, i: usize, b: &[Polyhedron]) -> Result<Subproblem> {
        let mut set = EfficientSet::default();
        if self.r.cells_hat[i].is_empty() {
            return Ok(Subproblem { index: i, branch: Branch::None, set });
        }
        if !self.r.int_nonempty {
            self.pull_back(i, core::slice::from_ref(&Polyhedron::whole(self.r.sigma())), &mut set)?;
            return Ok(Subproblem { index: i, branch: Branch::AllFeasible, set });
        }
        let w = order::weak_pareto_set(core::slice::from_ref(&b[i]), &self.r.c_z)?;
        let pieces: Vec<Polyhedron> = w.members.into_iter().map(|m| m.set).collect();
        self.pull_back(i, &pieces, &mut set)?;
        Ok(Subproblem { index: i, branch: Branch::None, set })
    }
}

/// Exact efficiency of a value against the images `T_i(A_i) + b_i` of all cells.
pub fn is_efficient_value(
    y: &[crate::num::Rational],
    images: &[Polyhedron],
    cone: &Cone,
    kind: SolutionKind,
) -> Result<bool> {
    match kind {
        SolutionKind::Pareto => order::is_pareto_point(y, images, cone),
        SolutionKind::WeakPareto => {
            if cone.has_interior() {
                order::is_weak_pareto_point(y, images, cone)
            } else {
                Ok(true)
            }
        }
    }
}

#[cfg(test)]
mod tests;
