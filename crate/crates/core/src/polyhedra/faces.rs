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

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::Polyhedron;
use crate::error::{Error, Result};

/// A face of a parent polyhedron: the parent with `active_rows` turned into
/// equalities. Certificates produced here list every row tight on the face.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceCertificate {
    pub active_rows: Vec<usize>,
}

impl FaceCertificate {
    pub fn new(mut active_rows: Vec<usize>) -> Self {
        active_rows.sort_unstable();
        active_rows.dedup();
        Self { active_rows }
    }

    /// The certified face as a row system over the parent's rows.
    pub fn face_of(&self, parent: &Polyhedron) -> Polyhedron {
        parent.face(&self.active_rows)
    }

    /// The face is nonempty and every active row is tight on all of it.
    pub fn is_valid_for(&self, parent: &Polyhedron) -> bool {
        if self.active_rows.iter().any(|&i| i >= parent.rows().len() || parent.rows()[i].strict) {
            return false;
        }
        let face = self.face_of(parent);
        match face.implicit_equalities() {
            Ok(eq) => self.active_rows.iter().all(|i| eq.contains(i)),
            Err(_) => false,
        }
    }
}

impl Polyhedron {
    /// `self` with rows `active` forced to equality.
    pub fn face(&self, active: &[usize]) -> Polyhedron {
        let mut out = self.clone();
        for &i in active {
            let rev = self.rows()[i].reversed();
            out.push(rev);
        }
        out
    }

    /// Rows of `self` (among the first `self.rows().len()`) tight on all of `face`.
    fn signature_of(&self, face: &Polyhedron) -> Result<Vec<usize>> {
        let m = self.rows().len();
        Ok(face.implicit_equalities()?.into_iter().filter(|&i| i < m).collect())
    }

    /// Smallest face of `self` containing the nonempty convex set `piece ⊆ self`:
    /// the rows tight at one relative-interior point of `piece`.
    pub fn minimal_face_containing(&self, piece: &Polyhedron) -> Result<FaceCertificate> {
        let x = piece.relative_interior_point()?;
        let tight = self.tight_rows(&x).into_iter().filter(|&i| !self.rows()[i].strict).collect();
        Ok(FaceCertificate::new(tight))
    }

    /// Every nonempty face, `self` first, each exactly once.
    pub fn enumerate_exposed_faces(&self) -> Result<Vec<(FaceCertificate, Polyhedron)>> {
        self.require_closed()?;
        if self.rows().is_empty() {
            return Err(Error::WholeSpace);
        }
        if self.is_empty() {
            return Ok(Vec::new());
        }
        let root = FaceCertificate::new(self.implicit_equalities()?);
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(root.active_rows.clone());
        let mut queue = VecDeque::from([root]);
        let mut out = Vec::new();
        while let Some(cert) = queue.pop_front() {
            for j in 0..self.rows().len() {
                if cert.active_rows.contains(&j) {
                    continue;
                }
                let mut active = cert.active_rows.clone();
                active.push(j);
                let candidate = self.face(&active);
                if candidate.is_empty() {
                    continue;
                }
                let sig = self.signature_of(&candidate)?;
                if seen.insert(sig.clone()) {
                    queue.push_back(FaceCertificate::new(sig));
                }
            }
            let face = cert.face_of(self);
            out.push((cert, face));
        }
        Ok(out)
    }
}
