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


//! The JSON file formats. Rationals are `"num/den"` strings.

use plvo_core::linalg::Matrix;
use plvo_core::num::{Rational, Vector};
use plvo_core::order::{EfficientPiece, EfficientSet};
use plvo_core::polyhedra::{Cone, Halfspace, Polyhedron};
use plvo_core::pwl::AffineMap;
use plvo_core::reduction::{Constraint, PlpCell, PlpInstance};
use plvo_core::solver::{Branch, PlpSolution, SolutionKind};
use serde::{Deserialize, Serialize};

use crate::Failure;

pub fn rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational, Failure> {
    s.trim().parse().map_err(|e| Failure::Parse(format!("not a rational: {s:?} ({e})")))
}

pub fn vector(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational).collect()
}

pub fn parse_vector(v: &[String]) -> Result<Vector, Failure> {
    v.iter().map(|s| parse_rational(s)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RowFile {
    pub a: Vec<String>,
    pub b: String,
    #[serde(default)]
    pub strict: bool,
}

impl RowFile {
    pub fn from_core(h: &Halfspace) -> Self {
        Self { a: vector(&h.functional), b: rational(&h.bound), strict: h.strict }
    }

    pub fn to_core(&self) -> Result<Halfspace, Failure> {
        Ok(Halfspace { functional: parse_vector(&self.a)?, bound: parse_rational(&self.b)?, strict: self.strict })
    }
}

pub fn rows(p: &Polyhedron) -> Vec<RowFile> {
    p.rows().iter().map(RowFile::from_core).collect()
}

pub fn polyhedron(dim: usize, rows: &[RowFile]) -> Result<Polyhedron, Failure> {
    let rows = rows.iter().map(RowFile::to_core).collect::<Result<_, _>>()?;
    Ok(Polyhedron::new(dim, rows)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellFile {
    pub rows: Vec<RowFile>,
    #[serde(rename = "T")]
    pub t: Vec<Vec<String>>,
    pub b: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintFile {
    pub xstar: Vec<String>,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeFile {
    pub rows: Vec<RowFile>,
}

/// A problem instance: cells with affine objective pieces, per-cell constraint
/// pieces, and the ordering cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub p: usize,
    pub q: usize,
    pub l: usize,
    pub cells: Vec<CellFile>,
    pub constraints: Vec<Vec<ConstraintFile>>,
    pub cone: ConeFile,
}

impl InstanceFile {
    pub fn from_core(inst: &PlpInstance) -> Self {
        let cells = inst
            .cells()
            .iter()
            .map(|c| CellFile {
                rows: rows(&c.domain),
                t: c.map.matrix.rows().iter().map(|r| vector(r)).collect(),
                b: vector(&c.map.offset),
            })
            .collect();
        let constraints = inst
            .cells()
            .iter()
            .map(|c| {
                c.constraints.iter().map(|k| ConstraintFile { xstar: vector(&k.xstar), c: rational(&k.c) }).collect()
            })
            .collect();
        Self {
            p: inst.p(),
            q: inst.q(),
            l: inst.l(),
            cells,
            constraints,
            cone: ConeFile { rows: rows(inst.cone().polyhedron()) },
        }
    }

    pub fn to_core(&self) -> Result<PlpInstance, Failure> {
        if self.constraints.len() != self.cells.len() {
            return Err(Failure::Invalid(format!(
                "{} cells but {} constraint lists",
                self.cells.len(),
                self.constraints.len()
            )));
        }
        let mut cells = Vec::with_capacity(self.cells.len());
        for (i, (c, ks)) in self.cells.iter().zip(&self.constraints).enumerate() {
            let domain = polyhedron(self.p, &c.rows)?;
            let t: Vec<Vector> = c.t.iter().map(|r| parse_vector(r)).collect::<Result<_, _>>()?;
            if t.len() != self.q || t.iter().any(|r| r.len() != self.p) {
                return Err(Failure::Invalid(format!("cell {i}: T must be {} x {}", self.q, self.p)));
            }
            let map = AffineMap::new(Matrix::from_rows(self.p, t), parse_vector(&c.b)?)?;
            let constraints = ks
                .iter()
                .map(|k| Ok(Constraint { xstar: parse_vector(&k.xstar)?, c: parse_rational(&k.c)? }))
                .collect::<Result<_, Failure>>()?;
            cells.push(PlpCell { domain, map, constraints });
        }
        let cone = Cone::new(polyhedron(self.q, &self.cone.rows)?)?;
        Ok(PlpInstance::new(self.p, self.q, self.l, cells, cone)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceFile {
    /// Source cell.
    pub cell: usize,
    /// Active rows of the certified face of the parent.
    pub face: Vec<usize>,
    pub rows: Vec<RowFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubproblemFile {
    pub index: usize,
    pub branch: String,
    pub pieces: Vec<PieceFile>,
}

/// A solved problem. Solution faces index the rows of the cell's feasible set,
/// value faces the rows of `value_parents`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    pub kind: String,
    pub branch: String,
    pub solution_set: Vec<PieceFile>,
    pub value_set: Vec<PieceFile>,
    pub value_parents: Vec<Vec<RowFile>>,
    pub per_subproblem: Vec<SubproblemFile>,
}

pub fn kind_name(k: SolutionKind) -> &'static str {
    match k {
        SolutionKind::Pareto => "pareto",
        SolutionKind::WeakPareto => "weak_pareto",
    }
}

pub fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::None => "none",
        Branch::AllFeasible => "all_feasible",
        Branch::NoPareto => "no_pareto",
    }
}

/// Pieces with their rows in canonical order, sorted by cell and then rows.
pub fn pieces(set: &EfficientSet) -> Vec<PieceFile> {
    let mut sorted: Vec<(usize, Polyhedron, &EfficientPiece)> =
        set.members.iter().map(|m| (m.source, m.set.sorted(), m)).collect();
    sorted.sort_by(|a, b| (a.0, a.1.rows(), &a.2.face).cmp(&(b.0, b.1.rows(), &b.2.face)));
    sorted
        .into_iter()
        .map(|(cell, set, m)| PieceFile { cell, face: m.face.active_rows.clone(), rows: rows(&set) })
        .collect()
}

impl SolutionFile {
    pub fn from_core(sol: &PlpSolution) -> Self {
        let mut per_subproblem: Vec<SubproblemFile> = sol
            .per_subproblem
            .iter()
            .map(|s| SubproblemFile { index: s.index, branch: branch_name(s.branch).into(), pieces: pieces(&s.set) })
            .collect();
        per_subproblem.sort_by_key(|s| s.index);
        Self {
            kind: kind_name(sol.kind).into(),
            branch: branch_name(sol.branch).into(),
            solution_set: pieces(&sol.solution_set),
            value_set: pieces(&sol.value_set),
            value_parents: sol.value_parents.iter().map(rows).collect(),
            per_subproblem,
        }
    }
}
