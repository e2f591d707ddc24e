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

use alloc::vec::Vec;

use super::Polyhedron;
use crate::error::{Error, Result};

/// Re-covers the union of full-dimensional closed `cells` by closed polyhedra with
/// nonempty, pairwise disjoint interiors.
///
/// Each new cell is split against every cell already emitted `H = {r_1, .., r_n}`
/// into the pieces `cell ∩ r_1 ∩ .. ∩ r_{k-1} ∩ {r_k reversed}`, and only pieces with
/// nonempty interior are kept.
pub fn refine_partition(cells: &[Polyhedron]) -> Result<Vec<Polyhedron>> {
    Ok(refine_partition_indexed(cells)?.into_iter().map(|(_, p)| p).collect())
}

/// As [`refine_partition`], tagging each output piece with the input cell it was cut from.
pub fn refine_partition_indexed(cells: &[Polyhedron]) -> Result<Vec<(usize, Polyhedron)>> {
    let mut out: Vec<(usize, Polyhedron)> = Vec::new();
    for (idx, cell) in cells.iter().enumerate() {
        cell.require_closed()?;
        if let Some(first) = cells.first() {
            Error::check_dim(first.dim(), cell.dim())?;
        }
        if !cell.has_interior() {
            return Err(Error::EmptyInterior(idx));
        }
        let mut pieces = alloc::vec![cell.canonicalize()];
        for (_, h) in &out {
            let rows = h.canonicalize().into_rows();
            let mut next = Vec::new();
            for piece in pieces {
                let mut prefix = piece;
                for r in &rows {
                    let outside = prefix.clone().with_row(r.reversed()).canonicalize();
                    if outside.has_interior() {
                        next.push(outside);
                    }
                    prefix = prefix.with_row(r.clone());
                    if !prefix.has_interior() {
                        break;
                    }
                }
            }
            pieces = next;
            if pieces.is_empty() {
                break;
            }
        }
        out.extend(pieces.into_iter().map(|p| (idx, p)));
    }
    Ok(out)
}
