//! Degree-homogeneous linear maps between graded spaces.

use crate::graded::{Deg, GradedSpace, Window};
use crate::linalg::{SparseMat, SparseVec, Q};
use num::Zero;
use std::collections::BTreeMap;

/// A degree-homogeneous map: the block at degree `n` is a sparse matrix
/// from the source component at `n` to the target component at `n + degree`.
/// Absent blocks are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub degree: Deg,
    src_dims: BTreeMap<Deg, usize>,
    tgt_dims: BTreeMap<Deg, usize>,
    blocks: BTreeMap<Deg, SparseMat>,
}

impl GradedMap {
    pub fn zero(degree: Deg, src: &GradedSpace, tgt: &GradedSpace) -> Self {
        GradedMap {
            degree,
            src_dims: src.dims(),
            tgt_dims: tgt.dims(),
            blocks: BTreeMap::new(),
        }
    }

    pub fn src_dim(&self, n: Deg) -> usize {
        self.src_dims.get(&n).copied().unwrap_or(0)
    }

    pub fn tgt_dim(&self, n: Deg) -> usize {
        self.tgt_dims.get(&n).copied().unwrap_or(0)
    }

    /// Install a block; shape must match the recorded dimensions and the
    /// block is dropped if it is zero.
    pub fn set_block(&mut self, n: Deg, m: SparseMat) {
        assert_eq!(m.ncols(), self.src_dim(n), "block source dim mismatch at {n}");
        assert_eq!(m.rows, self.tgt_dim(n + self.degree), "block target dim mismatch at {n}");
        if m.is_zero() {
            self.blocks.remove(&n);
        } else {
            self.blocks.insert(n, m);
        }
    }

    /// The block at `n`, materializing zeros on demand.
    pub fn block(&self, n: Deg) -> SparseMat {
        self.blocks
            .get(&n)
            .cloned()
            .unwrap_or_else(|| SparseMat::zero(self.tgt_dim(n + self.degree), self.src_dim(n)))
    }

    pub fn block_ref(&self, n: Deg) -> Option<&SparseMat> {
        self.blocks.get(&n)
    }

    pub fn block_degrees(&self) -> impl Iterator<Item = Deg> + '_ {
        self.blocks.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Apply to a homogeneous element of degree `n` given by coordinates.
    pub fn apply(&self, n: Deg, v: &SparseVec) -> SparseVec {
        match self.blocks.get(&n) {
            Some(b) => b.apply(v),
            None => Vec::new(),
        }
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> GradedMap {
        assert_eq!(other.tgt_dims, self.src_dims, "composition shape mismatch");
        let degree = self.degree + other.degree;
        let mut out = GradedMap {
            degree,
            src_dims: other.src_dims.clone(),
            tgt_dims: self.tgt_dims.clone(),
            blocks: BTreeMap::new(),
        };
        for (n, b) in &other.blocks {
            let composed = self.block(n + other.degree).mul(b);
            if !composed.is_zero() {
                out.blocks.insert(*n, composed);
            }
        }
        out
    }

    pub fn add(&self, other: &GradedMap) -> GradedMap {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.src_dims, other.src_dims);
        assert_eq!(self.tgt_dims, other.tgt_dims);
        let mut out = self.clone();
        for (n, b) in &other.blocks {
            let s = out.block(*n).add(b);
            if s.is_zero() {
                out.blocks.remove(n);
            } else {
                out.blocks.insert(*n, s);
            }
        }
        out
    }

    pub fn scale(&self, s: &Q) -> GradedMap {
        if s.is_zero() {
            return GradedMap {
                degree: self.degree,
                src_dims: self.src_dims.clone(),
                tgt_dims: self.tgt_dims.clone(),
                blocks: BTreeMap::new(),
            };
        }
        GradedMap {
            degree: self.degree,
            src_dims: self.src_dims.clone(),
            tgt_dims: self.tgt_dims.clone(),
            blocks: self.blocks.iter().map(|(n, b)| (*n, b.scale(s))).collect(),
        }
    }

    /// Reindex degrees: block at `n` becomes block at `n + shift` (both
    /// source and target move by `shift`), optionally rescaled.
    pub fn reindexed(&self, shift: Deg, scale: &Q) -> GradedMap {
        GradedMap {
            degree: self.degree,
            src_dims: self.src_dims.iter().map(|(d, k)| (d + shift, *k)).collect(),
            tgt_dims: self.tgt_dims.iter().map(|(d, k)| (d + shift, *k)).collect(),
            blocks: self
                .blocks
                .iter()
                .filter(|(_, b)| !scale.is_zero() || b.is_zero())
                .map(|(n, b)| (n + shift, b.scale(scale)))
                .collect(),
        }
    }

    /// Restriction of both source and target data to a window (blocks whose
    /// source or target falls outside are dropped).
    pub fn truncated(&self, w: Window) -> GradedMap {
        GradedMap {
            degree: self.degree,
            src_dims: self.src_dims.iter().filter(|(d, _)| w.contains(**d)).map(|(d, k)| (*d, *k)).collect(),
            tgt_dims: self.tgt_dims.iter().filter(|(d, _)| w.contains(**d)).map(|(d, k)| (*d, *k)).collect(),
            blocks: self
                .blocks
                .iter()
                .filter(|(n, _)| w.contains(**n) && w.contains(**n + self.degree))
                .map(|(n, b)| (*n, b.clone()))
                .collect(),
        }
    }

    /// Whether `self` and `other` agree blockwise.
    pub fn equals(&self, other: &GradedMap) -> bool {
        if self.degree != other.degree {
            return false;
        }
        let degs: std::collections::BTreeSet<Deg> = self
            .blocks
            .keys()
            .chain(other.blocks.keys())
            .copied()
            .collect();
        degs.into_iter().all(|n| self.block(n) == other.block(n))
    }
}

/// Builder that accumulates `(target_index, coeff)` entries for maps defined
/// elementwise on labeled bases.
pub struct MapBuilder {
    map: GradedMap,
    staged: BTreeMap<Deg, Vec<(usize, usize, Q)>>,
}

impl MapBuilder {
    pub fn new(degree: Deg, src: &GradedSpace, tgt: &GradedSpace) -> Self {
        MapBuilder { map: GradedMap::zero(degree, src, tgt), staged: BTreeMap::new() }
    }

    /// Record `coeff` in entry `(tgt_row, src_col)` of the block at `src_deg`.
    pub fn push(&mut self, src_deg: Deg, src_col: usize, tgt_row: usize, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        self.staged.entry(src_deg).or_default().push((tgt_row, src_col, coeff));
    }

    pub fn finish(mut self) -> GradedMap {
        for (n, triplets) in self.staged {
            let m = SparseMat::from_triplets(
                self.map.tgt_dim(n + self.map.degree),
                self.map.src_dim(n),
                triplets,
            );
            self.map.set_block(n, m);
        }
        self.map
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qi;

    #[test]
    fn compose_and_apply() {
        let v = GradedSpace::from_labels([(0, vec!["a".into()]), (1, vec!["b".into()])]);
        let mut f = GradedMap::zero(-1, &v, &v);
        f.set_block(1, SparseMat::from_triplets(1, 1, vec![(0, 0, qi(2))]));
        let ff = f.compose(&f);
        assert!(ff.is_zero());
        assert_eq!(f.apply(1, &vec![(0, qi(3))]), vec![(0, qi(6))]);
        assert!(f.apply(0, &vec![(0, qi(1))]).is_empty());
    }
}
