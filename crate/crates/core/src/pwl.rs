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

//! Piecewise linear vector functions `f(x) = T_i x + b_i` on cells `P_i` covering `Q^p`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::num::{self, Rational, Vector};
use crate::polyhedra::{refine_partition_indexed, Halfspace, Polyhedron, Region, Subspace};

/// `x -> T x + b`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    pub matrix: Matrix,
    pub offset: Vector,
}

impl AffineMap {
    pub fn new(matrix: Matrix, offset: Vector) -> Result<Self> {
        Error::check_dim(matrix.nrows(), offset.len())?;
        Ok(Self { matrix, offset })
    }

    pub fn linear(matrix: Matrix) -> Self {
        let offset = num::zeros(matrix.nrows());
        Self { matrix, offset }
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn apply(&self, x: &[Rational]) -> Vector {
        num::add(&self.matrix.apply(x), &self.offset)
    }

    /// `x -> self(M x)`
    pub fn precompose(&self, m: &Matrix) -> AffineMap {
        AffineMap { matrix: self.matrix.mul(m), offset: self.offset.clone() }
    }

    /// `x -> M self(x)`
    pub fn postcompose(&self, m: &Matrix) -> AffineMap {
        AffineMap { matrix: m.mul(&self.matrix), offset: m.apply(&self.offset) }
    }

    /// Preimage of a generalized polyhedron of the codomain.
    pub fn preimage(&self, p: &Polyhedron) -> Result<Polyhedron> {
        p.preimage(&self.matrix, &self.offset)
    }

    /// Image of a generalized polyhedron of the domain.
    pub fn image(&self, p: &Polyhedron) -> Result<Polyhedron> {
        p.image(&self.matrix, &self.offset)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub domain: Polyhedron,
    pub map: AffineMap,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PwlFunction {
    p: usize,
    q: usize,
    cells: Vec<Cell>,
}

/// Problems found by [`PwlFunction::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// A point covered by no cell.
    pub uncovered: Option<Vector>,
    /// Pairs of cells whose maps disagree somewhere on their common part.
    pub inconsistent: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.uncovered.is_none() && self.inconsistent.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if let Some(x) = self.uncovered {
            return Err(Error::Uncovered(x));
        }
        if let Some(&(i, j)) = self.inconsistent.first() {
            return Err(Error::InvalidFunction(format!("cells {i} and {j} disagree on their intersection")));
        }
        Ok(())
    }
}

/// `f(x1 + x2) = T x1 + g(x2)` with `x1` in `X1` and `x2` in `X2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub x1: Subspace,
    pub x2: Subspace,
    /// The common linear part on `X1`, in the coordinates of the `X1` basis.
    pub t: Matrix,
    /// `g` in the coordinates of the `X2` basis.
    pub g: PwlFunction,
    pub y_hat: Subspace,
}

impl Decomposition {
    /// `T x1 + g(x2)` for coordinate vectors `a` (in `X1`) and `c` (in `X2`).
    pub fn evaluate_split(&self, a: &[Rational], c: &[Rational]) -> Result<Vector> {
        Ok(num::add(&self.t.apply(a), &self.g.evaluate(c)?))
    }
}

/// Irredundant rows of a cell, empty for the whole space.
pub(crate) fn generators(p: &Polyhedron) -> Vec<Halfspace> {
    p.remove_redundant().into_rows()
}

impl PwlFunction {
    pub fn new(p: usize, q: usize, cells: Vec<Cell>) -> Result<Self> {
        for c in &cells {
            Error::check_dim(p, c.domain.dim())?;
            Error::check_dim(p, c.map.domain_dim())?;
            Error::check_dim(q, c.map.codomain_dim())?;
        }
        Ok(Self { p, q, cells })
    }

    /// A single affine piece on the whole space.
    pub fn affine(map: AffineMap) -> Self {
        let p = map.domain_dim();
        let q = map.codomain_dim();
        Self { p, q, cells: alloc::vec![Cell { domain: Polyhedron::whole(p), map }] }
    }

    pub fn domain_dim(&self) -> usize {
        self.p
    }

    pub fn codomain_dim(&self) -> usize {
        self.q
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Index of the first cell containing `x`.
    pub fn cell_index(&self, x: &[Rational]) -> Option<usize> {
        self.cells.iter().position(|c| c.domain.contains(x))
    }

    pub fn evaluate(&self, x: &[Rational]) -> Result<Vector> {
        Error::check_dim(self.p, x.len())?;
        let i = self.cell_index(x).ok_or_else(|| Error::Uncovered(x.to_vec()))?;
        Ok(self.cells[i].map.apply(x))
    }

    /// Exact coverage and pairwise consistency checks.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let mut rest = Region::from_polyhedron(Polyhedron::whole(self.p));
        for c in &self.cells {
            rest = rest.subtract_polyhedron(&c.domain);
            if rest.pieces().is_empty() {
                break;
            }
        }
        report.uncovered = rest.pieces().iter().find_map(Polyhedron::feasible_point);
        for i in 0..self.cells.len() {
            for j in i + 1..self.cells.len() {
                if !self.agree_on_overlap(i, j) {
                    report.inconsistent.push((i, j));
                }
            }
        }
        report
    }

    fn agree_on_overlap(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.cells[i], &self.cells[j]);
        let overlap = a.domain.meet(&b.domain).expect("same dimension");
        if overlap.is_empty() {
            return true;
        }
        let d = a.map.matrix.sub(&b.map.matrix);
        let e = num::sub(&b.map.offset, &a.map.offset);
        let mut agree = Polyhedron::whole(self.p);
        for k in 0..self.q {
            agree = agree.with_equality(d.row(k).to_vec(), e[k].clone());
        }
        overlap.is_subset_of(&agree).expect("same dimension")
    }

    /// Drops cells with empty interior and re-covers the domain by cells with
    /// pairwise disjoint interiors, cells with the same affine map kept adjacent.
    pub fn canonicalize(&self) -> Result<PwlFunction> {
        self.validate().into_result()?;
        let mut order: Vec<usize> = Vec::new();
        let mut groups: Vec<&AffineMap> = Vec::new();
        let mut group_of: Vec<usize> = Vec::new();
        for c in &self.cells {
            let g = match groups.iter().position(|m| **m == c.map) {
                Some(g) => g,
                None => {
                    groups.push(&c.map);
                    groups.len() - 1
                }
            };
            group_of.push(g);
        }
        for g in 0..groups.len() {
            for (i, c) in self.cells.iter().enumerate() {
                if group_of[i] == g && c.domain.has_interior() {
                    order.push(i);
                }
            }
        }
        let domains: Vec<Polyhedron> = order.iter().map(|&i| self.cells[i].domain.clone()).collect();
        let cells = refine_partition_indexed(&domains)?
            .into_iter()
            .map(|(k, domain)| Cell { domain, map: self.cells[order[k]].map.clone() })
            .collect();
        PwlFunction::new(self.p, self.q, cells)
    }

    /// Both functions re-expressed on the full-dimensional intersections of their cells.
    pub fn common_refinement(&self, other: &PwlFunction) -> Result<(PwlFunction, PwlFunction)> {
        Error::check_dim(self.p, other.p)?;
        let mut a = Vec::new();
        let mut b = Vec::new();
        for c in &self.cells {
            for d in &other.cells {
                let domain = c.domain.intersect(&d.domain)?;
                if domain.has_interior() {
                    a.push(Cell { domain: domain.clone(), map: c.map.clone() });
                    b.push(Cell { domain, map: d.map.clone() });
                }
            }
        }
        Ok((PwlFunction::new(self.p, self.q, a)?, PwlFunction::new(other.p, other.q, b)?))
    }

    /// Common null space of all cell generators, checked against the linear parts.
    pub fn common_linear_space(&self) -> Result<Subspace> {
        let functionals: Vec<Vector> = self
            .cells
            .iter()
            .flat_map(|c| generators(&c.domain))
            .map(|r| r.functional)
            .collect();
        let xf = Subspace::kernel(self.p, &functionals)?;
        self.check_common_action(&xf)?;
        Ok(xf)
    }

    fn check_common_action(&self, s: &Subspace) -> Result<()> {
        let Some(first) = self.cells.first() else { return Ok(()) };
        for v in s.basis() {
            let t1 = first.map.matrix.apply(v);
            if self.cells.iter().any(|c| c.map.matrix.apply(v) != t1) {
                return Err(Error::InvalidFunction("linear parts differ on the common linear space".into()));
            }
        }
        Ok(())
    }

    /// Splits `f` along `X1 ⊆ X_f` and a complement `X2`.
    pub fn decompose(&self, x1: &Subspace, x2: &Subspace) -> Result<Decomposition> {
        Error::check_dim(self.p, x1.ambient_dim())?;
        Error::check_dim(self.p, x2.ambient_dim())?;
        if !x1.is_complement_of(x2) {
            return Err(Error::NotDirectSum);
        }
        let gens: Vec<Polyhedron> = self
            .cells
            .iter()
            .map(|c| Polyhedron::new(self.p, generators(&c.domain)))
            .collect::<Result<_>>()?;
        for g in &gens {
            for r in g.rows() {
                if x1.basis().iter().any(|v| !num::dot(&r.functional, v).is_zero()) {
                    return Err(Error::NotInNullSpace);
                }
            }
        }
        self.check_common_action(x1)?;
        let e1 = x1.matrix();
        let h = x2.matrix();
        let t = match self.cells.first() {
            Some(c) => c.map.matrix.mul(&e1),
            None => Matrix::zeros(self.q, x1.dim()),
        };
        let mut cells = Vec::with_capacity(self.cells.len());
        let mut scan: Vec<Vector> = Vec::new();
        for (c, g) in self.cells.iter().zip(&gens) {
            let domain = g.decompose_along(x1, x2)?;
            let map = c.map.precompose(&h);
            for j in 0..x2.dim() {
                scan.push(map.matrix.column(j));
            }
            scan.push(map.offset.clone());
            cells.push(Cell { domain, map });
        }
        let g = PwlFunction::new(x2.dim(), self.q, cells)?;
        let y_hat = Subspace::span(self.q, &scan)?;
        Ok(Decomposition { x1: x1.clone(), x2: x2.clone(), t, g, y_hat })
    }

    /// `{(x, y) : x in P_i, y = T_i x + b_i}` per cell, in `Q^(p+q)`.
    pub fn graph_polyhedra(&self) -> Vec<Polyhedron> {
        let (p, q) = (self.p, self.q);
        self.cells
            .iter()
            .map(|c| {
                let mut g = c.domain.embed(p + q, 0);
                for k in 0..q {
                    let f = num::concat(&num::neg(c.map.matrix.row(k)), &num::unit(q, k));
                    g = g.with_equality(f, c.map.offset[k].clone());
                }
                g
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, ratio, vector};

    pub(crate) fn abs_value() -> PwlFunction {
        let neg = Cell {
            domain: Polyhedron::from_i64(1, &[(&[1], 0)]),
            map: AffineMap::linear(Matrix::from_i64(&[&[-1]])),
        };
        let pos = Cell {
            domain: Polyhedron::from_i64(1, &[(&[-1], 0)]),
            map: AffineMap::linear(Matrix::from_i64(&[&[1]])),
        };
        PwlFunction::new(1, 1, alloc::vec![neg, pos]).unwrap()
    }

    #[test]
    fn evaluation() {
        let f = abs_value();
        assert_eq!(f.evaluate(&vector(&[-3])).unwrap(), vector(&[3]));
        assert_eq!(f.evaluate(&vector(&[0])).unwrap(), vector(&[0]));
        assert_eq!(f.cells()[1].map.apply(&vector(&[0])), vector(&[0]));
        let g = PwlFunction::affine(
            AffineMap::new(Matrix::from_i64(&[&[1], &[-1]]), vector(&[0, 1])).unwrap(),
        );
        assert_eq!(g.evaluate(&[ratio(1, 2)]).unwrap(), alloc::vec![ratio(1, 2), ratio(1, 2)]);
    }

    #[test]
    fn validation() {
        assert!(abs_value().validate().is_ok());
        let mut jump = abs_value();
        jump.cells[0].map = AffineMap::linear(Matrix::from_i64(&[&[1]]));
        jump.cells[1].map = AffineMap::new(Matrix::from_i64(&[&[1]]), vector(&[1])).unwrap();
        assert_eq!(jump.validate().inconsistent, alloc::vec![(0, 1)]);
        let mut half = abs_value();
        half.cells.truncate(1);
        let r = half.validate();
        let x = r.uncovered.expect("uncovered point");
        assert!(x[0] > int(0));
        assert!(matches!(half.evaluate(&vector(&[1])), Err(Error::Uncovered(_))));
    }

    #[test]
    fn canonical_cells() {
        let mut f = abs_value();
        f.cells.push(Cell {
            domain: Polyhedron::boxed(&[int(0)], &[int(1)]),
            map: AffineMap::linear(Matrix::from_i64(&[&[1]])),
        });
        let c = f.canonicalize().unwrap();
        assert_eq!(c.cells().len(), 2);
        for i in 0..c.cells().len() {
            for j in 0..c.cells().len() {
                if i != j {
                    let int_j = c.cells()[j].domain.interior_rows();
                    assert!(c.cells()[i].domain.meet(&int_j).unwrap().is_empty());
                }
            }
        }
        for k in -8..=8 {
            let x = [ratio(k, 4)];
            assert_eq!(c.evaluate(&x).unwrap(), f.evaluate(&x).unwrap());
        }
    }

    #[test]
    fn flat_cell_dropped() {
        let whole = Cell {
            domain: Polyhedron::whole(2),
            map: AffineMap::linear(Matrix::identity(2)),
        };
        let seg = Cell {
            domain: Polyhedron::boxed(&[int(0), int(0)], &[int(0), int(1)]),
            map: AffineMap::linear(Matrix::identity(2)),
        };
        let f = PwlFunction::new(2, 2, alloc::vec![seg, whole]).unwrap();
        assert_eq!(f.canonicalize().unwrap().cells().len(), 1);
    }

    #[test]
    fn refinement_against_shifted_split() {
        let f = abs_value();
        let g = PwlFunction::new(
            1,
            1,
            alloc::vec![
                Cell {
                    domain: Polyhedron::from_i64(1, &[(&[1], 1)]),
                    map: AffineMap::linear(Matrix::from_i64(&[&[0]])),
                },
                Cell {
                    domain: Polyhedron::from_i64(1, &[(&[-1], -1)]),
                    map: AffineMap::new(Matrix::from_i64(&[&[1]]), vector(&[-1])).unwrap(),
                },
            ],
        )
        .unwrap();
        let (a, b) = f.common_refinement(&g).unwrap();
        assert_eq!(a.cells().len(), 3);
        assert!(a.cells()[1].domain.set_eq(&Polyhedron::boxed(&[int(0)], &[int(1)])).unwrap());
        for k in -8..=8 {
            let x = [ratio(k, 4)];
            assert_eq!(a.evaluate(&x).unwrap(), f.evaluate(&x).unwrap());
            assert_eq!(b.evaluate(&x).unwrap(), g.evaluate(&x).unwrap());
        }
        let lin = PwlFunction::affine(AffineMap::linear(Matrix::from_i64(&[&[2]])));
        let (a, _) = f.common_refinement(&lin).unwrap();
        assert_eq!(a.cells().len(), 2);
    }

    #[test]
    fn linear_spaces() {
        assert!(abs_value().common_linear_space().unwrap().is_zero());
        let lin = PwlFunction::affine(AffineMap::linear(Matrix::identity(2)));
        assert_eq!(lin.common_linear_space().unwrap().dim(), 2);
    }

    #[test]
    fn identity_decomposition() {
        let f = abs_value();
        let d = f.decompose(&Subspace::zero(1), &Subspace::full(1)).unwrap();
        for k in -8..=8 {
            let x = [ratio(k, 4)];
            assert_eq!(d.evaluate_split(&[], &x).unwrap(), f.evaluate(&x).unwrap());
        }
        let lin = PwlFunction::affine(
            AffineMap::new(Matrix::from_i64(&[&[1, 2]]), vector(&[3])).unwrap(),
        );
        let d = lin.decompose(&Subspace::full(2), &Subspace::zero(2)).unwrap();
        assert_eq!(d.t, Matrix::from_i64(&[&[1, 2]]));
        assert_eq!(d.g.evaluate(&[]).unwrap(), vector(&[3]));
    }

    #[test]
    fn graphs() {
        let gs = abs_value().graph_polyhedra();
        assert_eq!(gs.len(), 2);
        for k in -8..=8 {
            let x = ratio(k, 4);
            let y = if k < 0 { -x.clone() } else { x.clone() };
            assert!(gs.iter().any(|g| g.contains(&[x.clone(), y.clone()])));
            assert!(!gs.iter().any(|g| g.contains(&[x.clone(), &y + int(1)])));
        }
        let lin = PwlFunction::affine(AffineMap::linear(Matrix::identity(2)));
        assert_eq!(lin.graph_polyhedra().len(), 1);
    }
}
