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

//! Efficient points of unions of polyhedra with respect to a polyhedral cone.
//!
//! `y` is Pareto in `Ω` when no `v ∈ Ω \ {y}` has `y - v ∈ C`, and weak Pareto when
//! no `v ∈ Ω` has `y - v ∈ int(C)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::num::Rational;
use crate::polyhedra::{Cone, FaceCertificate, Halfspace, Polyhedron, Region};

/// One convex piece of an efficient set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EfficientPiece {
    pub set: Polyhedron,
    /// Index of the source polyhedron (or sub-problem).
    pub source: usize,
    /// Smallest face of the source containing `set`.
    pub face: FaceCertificate,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EfficientSet {
    pub members: Vec<EfficientPiece>,
}

impl EfficientSet {
    pub fn contains(&self, y: &[Rational]) -> bool {
        self.members.iter().any(|m| m.set.contains(y))
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Drops pieces whose row system repeats an earlier one up to row order.
    pub fn dedup_sets(&mut self) {
        let mut seen: Vec<Polyhedron> = Vec::new();
        self.members.retain(|m| {
            let key = m.set.sorted();
            if seen.contains(&key) {
                false
            } else {
                seen.push(key);
                true
            }
        });
    }

    pub fn region(&self, dim: usize) -> Region {
        Region::new(dim, self.members.iter().map(|m| m.set.clone()).collect()).expect("pieces share dimension")
    }

    /// Pieces of `region` taken from source `source`, certified against `parent`.
    pub(crate) fn push_region(&mut self, region: Region, source: usize, parent: &Polyhedron) -> Result<()> {
        for set in region.into_pieces() {
            if set.is_empty() || self.members.iter().any(|m| m.source == source && m.set == set) {
                continue;
            }
            let face = parent.minimal_face_containing(&set)?;
            self.members.push(EfficientPiece { set, source, face });
        }
        Ok(())
    }
}

fn require_interior(c: &Cone) -> Result<()> {
    if c.has_interior() {
        Ok(())
    } else {
        Err(Error::EmptyConeInterior)
    }
}

/// No `v ∈ ∪B` with `y - v ∈ int(C)`.
pub fn is_weak_pareto_point(y: &[Rational], b: &[Polyhedron], c: &Cone) -> Result<bool> {
    require_interior(c)?;
    Error::check_dim(c.dim(), y.len())?;
    let below = c.reflected_open_translate(y);
    for bj in b {
        if bj.meets(&below)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `B_j ∩ (y - C) ⊆ {y}` for every `j`.
pub fn is_pareto_point(y: &[Rational], b: &[Polyhedron], c: &Cone) -> Result<bool> {
    Error::check_dim(c.dim(), y.len())?;
    let below = c.reflected_translate(y);
    for bj in b {
        let q = bj.meet(&below)?;
        if q.is_empty() {
            continue;
        }
        if !(q.contains(y) && q.is_singleton()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `B + C`
pub fn dominated_hull(b: &Polyhedron, c: &Cone) -> Result<Polyhedron> {
    b.minkowski_sum(c.polyhedron())
}

/// Weak Pareto set of `∪B_j`, as `V_i = B_i \ ∪_j int(B_j + C)` split into closed pieces.
pub fn weak_pareto_set(b: &[Polyhedron], c: &Cone) -> Result<EfficientSet> {
    require_interior(c)?;
    let live: Vec<usize> = (0..b.len()).filter(|&j| !b[j].is_empty()).collect();
    // prime rows of each B_j + C; `None` when the sum is the whole space
    let mut hulls: Vec<Option<Polyhedron>> = Vec::with_capacity(live.len());
    for &j in &live {
        let k = dominated_hull(&b[j], c)?;
        hulls.push(match k.prime_generator_group() {
            Ok(p) => Some(p),
            Err(Error::WholeSpace) => None,
            Err(e) => return Err(e),
        });
    }
    let mut out = EfficientSet::default();
    for &i in &live {
        let mut pieces = alloc::vec![b[i].clone()];
        for hull in &hulls {
            let Some(k) = hull else {
                pieces.clear();
                break;
            };
            let open = k.interior_rows();
            let mut next: Vec<Polyhedron> = Vec::new();
            for piece in pieces {
                if !piece.meets(&open)? {
                    push_unique(&mut next, piece);
                    continue;
                }
                for r in k.rows() {
                    let cand = piece.clone().with_row(r.reversed()).canonicalize();
                    if !cand.is_empty() {
                        push_unique(&mut next, cand);
                    }
                }
            }
            pieces = next;
            if pieces.is_empty() {
                break;
            }
        }
        let region = Region::new(c.dim(), pieces)?;
        out.push_region(region, i, &b[i])?;
    }
    Ok(out)
}

fn push_unique(v: &mut Vec<Polyhedron>, p: Polyhedron) {
    if !v.contains(&p) {
        v.push(p);
    }
}

/// Pareto set of one polyhedron: the maximal faces of `B + C` whose relative
/// interior is efficient.
pub fn pareto_faces(b: &Polyhedron, c: &Cone) -> Result<Region> {
    if b.is_empty() {
        return Ok(Region::empty(b.dim()));
    }
    let k = dominated_hull(b, c)?;
    let k = match k.prime_generator_group() {
        Ok(p) => p,
        Err(Error::WholeSpace) => k,
        Err(e) => return Err(e),
    };
    let faces = if k.rows().is_empty() {
        alloc::vec![(FaceCertificate::new(Vec::new()), k.clone())]
    } else {
        k.enumerate_exposed_faces()?
    };
    let mut kept: Vec<(FaceCertificate, Polyhedron)> = Vec::new();
    for (cert, face) in faces {
        if kept.iter().any(|(g, _)| g.active_rows.iter().all(|r| cert.active_rows.contains(r))) {
            continue;
        }
        let w = face.relative_interior_point()?;
        if is_pareto_point(&w, core::slice::from_ref(&k), c)? {
            kept.push((cert, face));
        }
    }
    let pieces = kept.into_iter().map(|(_, f)| f.canonicalize()).collect();
    Region::new(b.dim(), pieces)
}

/// One member of a union whose efficient set is assembled piecewise.
#[derive(Clone, Debug)]
pub struct UnionPart {
    /// `E(B_j, C)`
    pub efficient: Region,
    /// `B_j + C`
    pub dominated: Region,
}

/// `E(∪B_j) ∩ E(B_i)` for each `i`, as `∩_{j≠i} E(B_i) ∩ ((B_j + C)ᶜ ∪ E(B_j))`.
pub fn union_efficient(parts: &[UnionPart]) -> Result<Vec<Region>> {
    let mut complements = Vec::with_capacity(parts.len());
    for p in parts {
        let whole = Region::from_polyhedron(Polyhedron::whole(p.dominated.dim()));
        complements.push(whole.subtract(&p.dominated)?);
    }
    let mut out = Vec::with_capacity(parts.len());
    for (i, part) in parts.iter().enumerate() {
        let mut acc = part.efficient.clone().pruned();
        for (j, other) in parts.iter().enumerate() {
            if j == i || acc.pieces().is_empty() {
                continue;
            }
            let keep = complements[j].clone().union(other.efficient.clone())?;
            acc = acc.intersect(&keep)?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Pareto set of `∪B_j`.
pub fn pareto_set(b: &[Polyhedron], c: &Cone) -> Result<EfficientSet> {
    Ok(pareto_set_with_parts(b, c)?.0)
}

/// Pareto set of `∪B_j` together with `E(B_j, C)` for each `j` on its own (empty
/// for empty `B_j`).
pub fn pareto_set_with_parts(b: &[Polyhedron], c: &Cone) -> Result<(EfficientSet, Vec<Region>)> {
    let live: Vec<usize> = (0..b.len()).filter(|&j| !b[j].is_empty()).collect();
    let mut parts = Vec::with_capacity(live.len());
    for &j in &live {
        parts.push(UnionPart {
            efficient: pareto_faces(&b[j], c)?,
            dominated: Region::from_polyhedron(dominated_hull(&b[j], c)?),
        });
    }
    let mut out = EfficientSet::default();
    for (region, &i) in union_efficient(&parts)?.into_iter().zip(&live) {
        out.push_region(region, i, &b[i])?;
    }
    let mut singles: Vec<Region> = b.iter().map(|bj| Region::empty(bj.dim())).collect();
    for (part, &j) in parts.into_iter().zip(&live) {
        singles[j] = part.efficient;
    }
    Ok((out, singles))
}

/// Closure of the convex hull of `∪B_i`, from the lifted disjunctive system.
pub fn closed_convex_hull(b: &[Polyhedron]) -> Result<Polyhedron> {
    let Some(first) = b.first() else {
        return Err(Error::EmptyPolyhedron);
    };
    let q = first.dim();
    if b.len() == 1 {
        return Ok(first.clone());
    }
    let m = b.len();
    // variables: z (q), z_1..z_m (q each), λ_1..λ_m
    let n = q + m * q + m;
    let lam = |i: usize| q + m * q + i;
    let mut rows: Vec<Halfspace> = Vec::new();
    for (i, bi) in b.iter().enumerate() {
        Error::check_dim(q, bi.dim())?;
        for r in bi.closure_rows().rows() {
            let mut f = crate::num::zeros(n);
            f[q + i * q..q + (i + 1) * q].clone_from_slice(&r.functional);
            f[lam(i)] = -r.bound.clone();
            rows.push(Halfspace::le(f, crate::num::int(0)));
        }
        rows.push(Halfspace::ge(crate::num::unit(n, lam(i)), crate::num::int(0)));
    }
    let mut sum = crate::num::zeros(n);
    for i in 0..m {
        sum[lam(i)] = crate::num::int(1);
    }
    let mut lifted = Polyhedron::new(n, rows)?.with_equality(sum, crate::num::int(1));
    for k in 0..q {
        let mut f = crate::num::unit(n, k);
        for i in 0..m {
            f[q + i * q + k] = crate::num::int(-1);
        }
        lifted = lifted.with_equality(f, crate::num::int(0));
    }
    Ok(lifted.project(&(0..q).collect::<Vec<_>>()))
}

/// Weak Pareto set of a `C`-convex union through supporting functionals of
/// `conv(∪B_i) + C`: each irredundant row `<g, z> <= r` gives `c* = -g` and the
/// argmin pieces `B_i ∩ {<g, z> = r}`.
pub fn scalarization_weak_pareto(b: &[Polyhedron], c: &Cone) -> Result<EfficientSet> {
    require_interior(c)?;
    let live: Vec<usize> = (0..b.len()).filter(|&j| !b[j].is_empty()).collect();
    if live.is_empty() {
        return Ok(EfficientSet::default());
    }
    let mut sums = Vec::with_capacity(live.len());
    for &j in &live {
        sums.push(dominated_hull(&b[j], c)?);
    }
    let k = closed_convex_hull(&sums)?;
    if sums.len() > 1 {
        let union = Region::new(c.dim(), sums.clone())?;
        if !Region::from_polyhedron(k.clone()).is_subset_of(&union)? {
            return Err(Error::NotConeConvex);
        }
    }
    let mut out = EfficientSet::default();
    let k = match k.prime_generator_group() {
        Ok(p) => p,
        Err(Error::WholeSpace) => return Ok(out),
        Err(e) => return Err(e),
    };
    for r in k.rows() {
        for &i in &live {
            let piece = b[i].clone().with_equality(r.functional.clone(), r.bound.clone()).canonicalize();
            if !piece.is_empty() {
                out.push_region(Region::from_polyhedron(piece), i, &b[i])?;
            }
        }
    }
    Ok(out)
}
