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

//! Problem instances and their reduction to a finite chart.
//!
//! `X = X1 ⊕ X2` where `X1` is the common null space of every cell and constraint
//! functional and `X2 = span{h_ι}` is dual to a maximal independent set `e*_ι` of
//! those functionals. On the value side `Z = span{u_1, .., u_ς}` is a complement of
//! `T̂(X1)` inside `T̂(X1) + span(D)`, with `D` the images `T_i h_ι` and offsets `b_i`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::num::{self, Rational, Vector};
use crate::polyhedra::{Cone, Halfspace, Polyhedron, Subspace};
use crate::pwl::{AffineMap, Cell, PwlFunction};

/// Restriction of one scalar constraint `φ_j` to a cell: `φ_j(x) = <xstar, x> - c`,
/// feasible where `φ_j(x) <= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub xstar: Vector,
    pub c: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlpCell {
    pub domain: Polyhedron,
    pub map: AffineMap,
    pub constraints: Vec<Constraint>,
}

/// Minimize `f` with respect to `C` subject to `φ_j(x) <= 0` for every `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlpInstance {
    p: usize,
    q: usize,
    l: usize,
    cells: Vec<PlpCell>,
    cone: Cone,
}

/// What [`PlpInstance::validate`] found.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InstanceReport {
    pub uncovered: Option<Vector>,
    /// Cell pairs on which the objective pieces disagree.
    pub objective_conflicts: Vec<(usize, usize)>,
    /// `(j, i, i')`: constraint `j` disagrees on the overlap of cells `i` and `i'`.
    pub constraint_conflicts: Vec<(usize, usize, usize)>,
    /// Cells with empty interior.
    pub flat_cells: Vec<usize>,
    /// Pairs with `P_i ∩ int(P_i')` nonempty.
    pub overlapping_cells: Vec<(usize, usize)>,
}

impl InstanceReport {
    /// The function data is well defined (coverage and consistency).
    pub fn is_valid(&self) -> bool {
        self.uncovered.is_none() && self.objective_conflicts.is_empty() && self.constraint_conflicts.is_empty()
    }

    /// Valid and already in canonical cell form.
    pub fn is_canonical(&self) -> bool {
        self.is_valid() && self.flat_cells.is_empty() && self.overlapping_cells.is_empty()
    }
}

impl PlpInstance {
    pub fn new(p: usize, q: usize, l: usize, cells: Vec<PlpCell>, cone: Cone) -> Result<Self> {
        Error::check_dim(q, cone.dim())?;
        if cells.is_empty() {
            return Err(Error::InvalidInstance("no cells".into()));
        }
        for (i, c) in cells.iter().enumerate() {
            Error::check_dim(p, c.domain.dim())?;
            Error::check_dim(p, c.map.domain_dim())?;
            Error::check_dim(q, c.map.codomain_dim())?;
            if c.constraints.len() != l {
                return Err(Error::InvalidInstance(format!(
                    "cell {i} has {} constraint pieces, expected {l}",
                    c.constraints.len()
                )));
            }
            for k in &c.constraints {
                Error::check_dim(p, k.xstar.len())?;
            }
            c.domain.require_closed()?;
        }
        Ok(Self { p, q, l, cells, cone })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn m(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[PlpCell] {
        &self.cells
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn with_cone(&self, cone: Cone) -> Result<Self> {
        Self::new(self.p, self.q, self.l, self.cells.clone(), cone)
    }

    /// `A_i`: the rows of `P_i` followed by one row per constraint.
    pub fn feasible_cell(&self, i: usize) -> Result<Polyhedron> {
        let c = self.cells.get(i).ok_or(Error::NoSuchCell { index: i, count: self.m() })?;
        let mut a = c.domain.clone();
        for k in &c.constraints {
            a.push(Halfspace::le(k.xstar.clone(), k.c.clone()));
        }
        Ok(a)
    }

    pub fn feasible_cells(&self) -> Vec<Polyhedron> {
        (0..self.m()).map(|i| self.feasible_cell(i).expect("index in range")).collect()
    }

    /// Image `T_i(A_i) + b_i` of one feasible cell.
    pub fn image(&self, i: usize) -> Result<Polyhedron> {
        let a = self.feasible_cell(i)?;
        if a.is_empty() {
            return Ok(Polyhedron::empty(self.q));
        }
        self.cells[i].map.image(&a)
    }

    pub fn objective(&self) -> PwlFunction {
        let cells = self.cells.iter().map(|c| Cell { domain: c.domain.clone(), map: c.map.clone() }).collect();
        PwlFunction::new(self.p, self.q, cells).expect("dimensions checked")
    }

    pub fn constraint_function(&self, j: usize) -> PwlFunction {
        let cells = self
            .cells
            .iter()
            .map(|c| {
                let k = &c.constraints[j];
                let map = AffineMap::new(Matrix::from_rows(self.p, alloc::vec![k.xstar.clone()]), alloc::vec![-k.c.clone()])
                    .expect("one row");
                Cell { domain: c.domain.clone(), map }
            })
            .collect();
        PwlFunction::new(self.p, 1, cells).expect("dimensions checked")
    }

    /// `f(x)`
    pub fn evaluate(&self, x: &[Rational]) -> Result<Vector> {
        self.objective().evaluate(x)
    }

    /// `φ_j(x) <= 0` for every `j`.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        match self.cells.iter().position(|c| c.domain.contains(x)) {
            Some(i) => self.feasible_cell(i).expect("index").contains(x),
            None => false,
        }
    }

    pub fn validate(&self) -> InstanceReport {
        let f = self.objective().validate();
        let mut report = InstanceReport {
            uncovered: f.uncovered,
            objective_conflicts: f.inconsistent,
            ..Default::default()
        };
        for j in 0..self.l {
            for (i, k) in self.constraint_function(j).validate().inconsistent {
                report.constraint_conflicts.push((j, i, k));
            }
        }
        for (i, c) in self.cells.iter().enumerate() {
            if !c.domain.has_interior() {
                report.flat_cells.push(i);
            }
        }
        for i in 0..self.m() {
            for k in 0..self.m() {
                if i == k || report.flat_cells.contains(&k) {
                    continue;
                }
                let inner = self.cells[k].domain.canonicalize().interior_rows();
                if self.cells[i].domain.meets(&inner).expect("same dimension") {
                    report.overlapping_cells.push((i, k));
                }
            }
        }
        report
    }

    pub fn check(&self) -> Result<()> {
        let r = self.validate();
        if let Some(x) = r.uncovered {
            return Err(Error::Uncovered(x));
        }
        if let Some((i, k)) = r.objective_conflicts.first() {
            return Err(Error::InvalidInstance(format!("objective pieces of cells {i} and {k} disagree")));
        }
        if let Some((j, i, k)) = r.constraint_conflicts.first() {
            return Err(Error::InvalidInstance(format!("constraint {j} disagrees on cells {i} and {k}")));
        }
        Ok(())
    }

    /// Same problem on cells with nonempty, pairwise disjoint interiors.
    pub fn canonicalize(&self) -> Result<Self> {
        self.check()?;
        // group cells sharing all of their data so that equal pieces stay adjacent
        let mut order: Vec<usize> = Vec::new();
        for i in 0..self.m() {
            if order.contains(&i) {
                continue;
            }
            for k in i..self.m() {
                let (a, b) = (&self.cells[i], &self.cells[k]);
                if a.map == b.map && a.constraints == b.constraints {
                    order.push(k);
                }
            }
        }
        let order: Vec<usize> = order.into_iter().filter(|&i| self.cells[i].domain.has_interior()).collect();
        let domains: Vec<Polyhedron> = order.iter().map(|&i| self.cells[i].domain.clone()).collect();
        let refined = crate::polyhedra::refine_partition_indexed(&domains)?;
        let cells = refined
            .into_iter()
            .map(|(k, domain)| {
                let src = &self.cells[order[k]];
                PlpCell { domain, map: src.map.clone(), constraints: src.constraints.clone() }
            })
            .collect();
        Self::new(self.p, self.q, self.l, cells, self.cone.clone())
    }

    /// `u*_ik` then `x*_ij` for each cell in order.
    fn functionals(&self) -> Vec<Vector> {
        let mut out = Vec::new();
        for c in &self.cells {
            out.extend(c.domain.rows().iter().map(|r| r.functional.clone()));
            out.extend(c.constraints.iter().map(|k| k.xstar.clone()));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ReductionMode {
    /// `X1` is the common null space of all functionals.
    #[default]
    Full,
    /// `X1 = {0}`, `X2 = Q^p` and `Z = Y`, all with unit bases.
    Skip,
}

/// The reduced problem in explicit coordinates: `t` for `X2` (`x2 = Σ t_ι h_ι`) and
/// `z` for `Z` (`y = Σ z_k u_k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedProblem {
    pub mode: ReductionMode,
    pub x1: Subspace,
    /// `e*_1..e*_ν`
    pub dual_basis: Vec<Vector>,
    /// `h_1..h_ν`
    pub h: Vec<Vector>,
    /// `T̂` on the basis of `X1` (`q × dim X1`).
    pub t_hat: Matrix,
    /// `T̂(X1)`
    pub t_hat_image: Subspace,
    /// `u_1..u_ς`
    pub z: Vec<Vector>,
    /// `Π_Z` as a `ς × q` matrix, exact on `T̂(X1) ⊕ Z`.
    pub pi_z: Matrix,
    /// `C_Z` in `z` coordinates.
    pub c_z: Cone,
    /// `(T̂(X1) ⊕ Z) ∩ int(C)` is nonempty.
    pub int_nonempty: bool,
    /// `C_Z = C ∩ (T̂(X1) ⊕ Z)`.
    pub cone_condition: bool,
    /// `C ∩ T̂(X1) = {0}`, the condition under which Pareto solutions can exist.
    pub t_hat_pointed: bool,
    /// `Â_i` in `t` coordinates, rows in the order of `A_i`.
    pub cells_hat: Vec<Polyhedron>,
    /// `t -> Π_Z(T_i H t + b_i)`
    pub fhat: Vec<AffineMap>,
}

/// Common null space of every `u*_ik` and `x*_ij`.
pub fn compute_x1(inst: &PlpInstance) -> Subspace {
    Subspace::kernel(inst.p, &inst.functionals()).expect("functionals have length p")
}

/// Greedy maximal independent `e*` (cells ascending, `u*` before `x*`) and the dual
/// vectors `h`, each the RREF solution with free variables at zero.
pub fn compute_x2(inst: &PlpInstance) -> (Vec<Vector>, Vec<Vector>) {
    dual_pair(inst.p, &inst.functionals())
}

fn dual_pair(p: usize, functionals: &[Vector]) -> (Vec<Vector>, Vec<Vector>) {
    let idx = linalg::independent_subset(p, functionals);
    let e: Vec<Vector> = idx.into_iter().map(|i| functionals[i].clone()).collect();
    let nu = e.len();
    let h = (0..nu)
        .map(|k| linalg::solve(p, &e, &num::unit(nu, k)).expect("independent rows are solvable"))
        .collect();
    (e, h)
}

/// `T̂ = T_1` on the basis of `X1`, checked against every other cell.
pub fn compute_t_hat(inst: &PlpInstance, x1: &Subspace) -> Result<Matrix> {
    let e1 = x1.matrix();
    let t = inst.cells[0].map.matrix.mul(&e1);
    for (i, c) in inst.cells.iter().enumerate().skip(1) {
        if c.map.matrix.mul(&e1) != t {
            return Err(Error::InvalidInstance(format!("cell {i} disagrees with cell 0 on the common null space")));
        }
    }
    Ok(t)
}

/// Greedy scan of `D` (cells ascending; `T_i h_1..T_i h_ν`, then `b_i`) keeping vectors
/// outside `T̂(X1)` plus the span kept so far.
pub fn compute_z(inst: &PlpInstance, h: &[Vector], t_hat_image: &Subspace) -> Vec<Vector> {
    let mut span: Vec<Vector> = t_hat_image.basis().to_vec();
    let mut kept = Vec::new();
    for c in &inst.cells {
        let d = h.iter().map(|v| c.map.matrix.apply(v)).chain(core::iter::once(c.map.offset.clone()));
        for u in d {
            if !linalg::in_span(inst.q, &span, &u) {
                span.push(u.clone());
                kept.push(u);
            }
        }
    }
    kept
}

/// `Π_Z` from the basis `[W | U | R]` of `Q^q` with `W` spanning `T̂(X1)`.
fn projection(q: usize, w: &[Vector], u: &[Vector]) -> Matrix {
    let mut basis: Vec<Vector> = w.to_vec();
    basis.extend(u.iter().cloned());
    let full = linalg::extend_to_basis(q, &basis);
    let inv = linalg::inverse(&Matrix::from_columns(q, &full)).expect("basis is invertible");
    let rows = (w.len()..w.len() + u.len()).map(|k| inv.row(k).to_vec()).collect();
    Matrix::from_rows(q, rows)
}

/// The cone in `(w, z)` coordinates of `T̂(X1) ⊕ Z`.
fn cone_in_chart(c: &Cone, w: &[Vector], u: &[Vector]) -> Polyhedron {
    let q = c.dim();
    let mut basis: Vec<Vector> = w.to_vec();
    basis.extend(u.iter().cloned());
    let m = Matrix::from_columns(q, &basis);
    c.polyhedron().preimage(&m, &num::zeros(q)).expect("cone dimension")
}

/// The ordering cone seen from the reduced value space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedCone {
    pub c_z: Cone,
    /// `(T̂(X1) ⊕ Z) ∩ int(C) ≠ ∅`
    pub int_nonempty: bool,
    /// `C_Z = C ∩ (T̂(X1) ⊕ Z)`
    pub cone_condition: bool,
    /// `C ∩ T̂(X1) = {0}`
    pub t_hat_pointed: bool,
}

pub fn compute_cz(c: &Cone, w: &[Vector], u: &[Vector]) -> Result<ReducedCone> {
    let dw = w.len();
    let du = u.len();
    let chart = cone_in_chart(c, w, u);
    let c_z = Cone::new(chart.project(&(dw..dw + du).collect::<Vec<_>>()))?;
    // strict rows that vanish on the subspace must stay and read `0 < 0`
    let mut basis: Vec<Vector> = w.to_vec();
    basis.extend(u.iter().cloned());
    let int_nonempty = c.has_interior()
        && !c.interior().preimage(&Matrix::from_columns(c.dim(), &basis), &num::zeros(c.dim()))?.is_empty();
    // C_Z sitting at w = 0, against the full slice
    let mut lifted = c_z.polyhedron().embed(dw + du, dw);
    for k in 0..dw {
        lifted = lifted.with_equality(num::unit(dw + du, k), Rational::from_integer(0.into()));
    }
    let cone_condition = lifted.set_eq(&chart)?;
    let t_hat_pointed = c.polyhedron().preimage(&Matrix::from_columns(c.dim(), w), &num::zeros(c.dim()))?.is_singleton();
    Ok(ReducedCone { c_z, int_nonempty, cone_condition, t_hat_pointed })
}

pub fn reduce(inst: &PlpInstance) -> Result<ReducedProblem> {
    reduce_with(inst, ReductionMode::Full)
}

pub fn reduce_with(inst: &PlpInstance, mode: ReductionMode) -> Result<ReducedProblem> {
    let (p, q) = (inst.p, inst.q);
    let (x1, e, h) = match mode {
        ReductionMode::Full => {
            let (e, h) = compute_x2(inst);
            (compute_x1(inst), e, h)
        }
        ReductionMode::Skip => {
            let id: Vec<Vector> = (0..p).map(|i| num::unit(p, i)).collect();
            (Subspace::zero(p), id.clone(), id)
        }
    };
    let t_hat = compute_t_hat(inst, &x1)?;
    let t_hat_image = x1.image(&inst.cells[0].map.matrix)?;
    let z = match mode {
        ReductionMode::Full => compute_z(inst, &h, &t_hat_image),
        ReductionMode::Skip => (0..q).map(|i| num::unit(q, i)).collect(),
    };
    let pi_z = match mode {
        ReductionMode::Full => projection(q, t_hat_image.basis(), &z),
        ReductionMode::Skip => Matrix::identity(q),
    };
    let ReducedCone { c_z, int_nonempty, cone_condition, t_hat_pointed } = match mode {
        ReductionMode::Full => compute_cz(&inst.cone, t_hat_image.basis(), &z)?,
        ReductionMode::Skip => ReducedCone {
            c_z: inst.cone.clone(),
            int_nonempty: inst.cone.has_interior(),
            cone_condition: true,
            t_hat_pointed: true,
        },
    };
    let hm = Matrix::from_columns(p, &h);
    let mut cells_hat = Vec::with_capacity(inst.m());
    let mut fhat = Vec::with_capacity(inst.m());
    for (i, c) in inst.cells.iter().enumerate() {
        let a = inst.feasible_cell(i)?;
        cells_hat.push(a.preimage(&hm, &num::zeros(p))?);
        let map = c.map.precompose(&hm).postcompose(&pi_z);
        fhat.push(map);
    }
    Ok(ReducedProblem {
        mode,
        x1,
        dual_basis: e,
        h,
        t_hat,
        t_hat_image,
        z,
        pi_z,
        c_z,
        int_nonempty,
        cone_condition,
        t_hat_pointed,
        cells_hat,
        fhat,
    })
}

impl ReducedProblem {
    pub fn nu(&self) -> usize {
        self.h.len()
    }

    pub fn sigma(&self) -> usize {
        self.z.len()
    }

    /// `E` with `E h_ι = e_ι` and kernel `X1`.
    pub fn chart(&self, p: usize) -> Matrix {
        Matrix::from_rows(p, self.dual_basis.clone())
    }

    /// `t -> Σ t_ι h_ι`
    pub fn x2_embedding(&self, p: usize) -> Matrix {
        Matrix::from_columns(p, &self.h)
    }

    /// `z -> Σ z_k u_k`
    pub fn z_embedding(&self, q: usize) -> Matrix {
        Matrix::from_columns(q, &self.z)
    }

    /// `T̂(X1) ⊕ Z`
    pub fn value_space(&self, q: usize) -> Subspace {
        let u = Subspace::span(q, &self.z).expect("length q");
        self.t_hat_image.sum(&u).expect("same ambient")
    }

    /// `X1 + {x2 = H t : t in piece}` as a row system on `X`.
    pub fn lift_solution(&self, p: usize, piece: &Polyhedron) -> Result<Polyhedron> {
        Error::check_dim(self.nu(), piece.dim())?;
        piece.preimage(&self.chart(p), &num::zeros(self.nu()))
    }

    /// `T̂(X1) + {U z : z in piece}` as a row system on `Y`.
    pub fn lift_value(&self, q: usize, piece: &Polyhedron) -> Result<Polyhedron> {
        Error::check_dim(self.sigma(), piece.dim())?;
        let mut out = piece.preimage(&self.pi_z, &num::zeros(self.sigma()))?;
        for a in self.value_space(q).annihilator() {
            out = out.with_equality(a, Rational::from_integer(0.into()));
        }
        Ok(out)
    }

    /// `f(x1 + x2) - T̂ x1 - U f̂(t)` lies in `T̂(X1)` for `x1 = X1 a`, `x2 = H t`.
    pub fn check_identity(&self, inst: &PlpInstance, a: &[Rational], t: &[Rational]) -> Result<bool> {
        let (p, q) = (inst.p, inst.q);
        let x1 = self.x1.matrix().apply(a);
        let x2 = self.x2_embedding(p).apply(t);
        let x = num::add(&x1, &x2);
        let Some(i) = inst.cells.iter().position(|c| c.domain.contains(&x)) else {
            return Err(Error::Uncovered(x));
        };
        let fx = inst.cells[i].map.apply(&x);
        let tx1 = self.t_hat.apply(a);
        let lifted = self.z_embedding(q).apply(&self.fhat[i].apply(t));
        let rest = num::sub(&num::sub(&fx, &tx1), &lifted);
        Ok(self.t_hat_image.contains(&rest))
    }
}

#[cfg(test)]
mod tests;
