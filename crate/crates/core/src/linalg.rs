//! Sparse exact-rational matrices and fraction-free rank computation.
//!
//! Matrices are stored column-major: a column is a sorted list of
//! `(row, coefficient)` pairs with nonzero rational coefficients. Ranks are
//! computed by fraction-free elimination over big integers (columns are
//! cleared of denominators first, updates are cross-multiplications followed
//! by content reduction), with pivots chosen to minimize entry bit size.
//! Kernel bases use straightforward rational elimination with recorded
//! column operations; they are only needed on small systems.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Exact rational scalar used across the crate.
pub type Q = BigRational;

/// `n` as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics if `q == 0`.
pub fn qr(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}

/// Sparse vector: sorted `(index, coeff)` pairs, coefficients nonzero.
pub type SparseVec = Vec<(usize, Q)>;

/// Collect an unsorted list of `(index, coeff)` contributions into a
/// normalized sparse vector (sorted, duplicates summed, zeros dropped).
pub fn collect_sparse(terms: impl IntoIterator<Item = (usize, Q)>) -> SparseVec {
    let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
    for (i, c) in terms {
        if c.is_zero() {
            continue;
        }
        let e = acc.entry(i).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            acc.remove(&i);
        }
    }
    acc.into_iter().collect()
}

/// Add `scale * src` into a map accumulator.
fn axpy_into(acc: &mut BTreeMap<usize, Q>, scale: &Q, src: &[(usize, Q)]) {
    for (i, c) in src {
        let v = scale * c;
        if v.is_zero() {
            continue;
        }
        let e = acc.entry(*i).or_insert_with(Q::zero);
        *e += v;
        if e.is_zero() {
            acc.remove(i);
        }
    }
}

/// Column-major sparse matrix over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    pub rows: usize,
    pub cols: Vec<SparseVec>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMat { rows, cols: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat {
            rows: n,
            cols: (0..n).map(|i| vec![(i, Q::one())]).collect(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// Build from `(row, col, coeff)` triplets.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Q)>,
    ) -> Self {
        let mut by_col: Vec<Vec<(usize, Q)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet out of bounds");
            by_col[c].push((r, v));
        }
        SparseMat {
            rows,
            cols: by_col.into_iter().map(collect_sparse).collect(),
        }
    }

    pub fn entry(&self, r: usize, c: usize) -> Q {
        self.cols[c]
            .iter()
            .find(|(i, _)| *i == r)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Q::zero)
    }

    pub fn set_col(&mut self, c: usize, col: SparseVec) {
        debug_assert!(col.iter().all(|(r, v)| *r < self.rows && !v.is_zero()));
        self.cols[c] = col;
    }

    /// Matrix-vector product (vector indexed by columns).
    pub fn apply(&self, v: &[(usize, Q)]) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (j, c) in v {
            axpy_into(&mut acc, c, &self.cols[*j]);
        }
        acc.into_iter().collect()
    }

    /// Composition `self * other` (apply `other` first).
    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.ncols(), other.rows, "dimension mismatch in mul");
        let cols: Vec<SparseVec> = other
            .cols
            .par_iter()
            .map(|col| self.apply(col))
            .collect();
        SparseMat { rows: self.rows, cols }
    }

    pub fn add(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.ncols(), other.ncols());
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut acc = BTreeMap::new();
                axpy_into(&mut acc, &Q::one(), a);
                axpy_into(&mut acc, &Q::one(), b);
                acc.into_iter().collect()
            })
            .collect();
        SparseMat { rows: self.rows, cols }
    }

    pub fn scale(&self, s: &Q) -> SparseMat {
        if s.is_zero() {
            return SparseMat::zero(self.rows, self.ncols());
        }
        SparseMat {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .map(|c| c.iter().map(|(i, v)| (*i, v * s)).collect())
                .collect(),
        }
    }

    pub fn transpose(&self) -> SparseMat {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                cols[*i].push((j, v.clone()));
            }
        }
        SparseMat { rows: self.ncols(), cols }
    }

    /// Rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        rank_of_cols(self.cols.iter().cloned())
    }

    /// Basis of the kernel, as vectors over the column index set.
    ///
    /// Rational elimination with recorded column operations; intended for
    /// the small systems where an explicit basis is needed.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        // pivot row -> (reduced column, combination of original columns)
        let mut pivots: Vec<(usize, SparseVec, SparseVec)> = Vec::new();
        let mut kernel = Vec::new();
        for (j, col) in self.cols.iter().enumerate() {
            let mut cur: BTreeMap<usize, Q> = col.iter().cloned().collect();
            let mut comb: BTreeMap<usize, Q> = BTreeMap::new();
            comb.insert(j, Q::one());
            for (pr, pcol, pcomb) in &pivots {
                if let Some(c) = cur.get(pr).cloned() {
                    let lead = pcol.iter().find(|(i, _)| i == pr).unwrap().1.clone();
                    let f = -(c / lead);
                    axpy_into(&mut cur, &f, pcol);
                    axpy_into(&mut comb, &f, pcomb);
                }
            }
            if cur.is_empty() {
                kernel.push(comb.into_iter().collect());
            } else {
                let pr = *cur.keys().next().unwrap();
                pivots.push((
                    pr,
                    cur.into_iter().collect(),
                    comb.into_iter().collect(),
                ));
            }
        }
        kernel
    }
}

/// Integer sparse column used during elimination.
type ZVec = Vec<(usize, BigInt)>;

fn clear_denominators(col: &[(usize, Q)]) -> ZVec {
    if col.is_empty() {
        return Vec::new();
    }
    let mut l = BigInt::one();
    for (_, v) in col {
        l = num::integer::lcm(l, v.denom().clone());
    }
    let mut out: ZVec = col
        .iter()
        .map(|(i, v)| (*i, v.numer() * (&l / v.denom())))
        .collect();
    strip_content(&mut out);
    out
}

fn strip_content(col: &mut ZVec) {
    let mut g = BigInt::zero();
    for (_, v) in col.iter() {
        g = num::integer::gcd(g, v.clone());
        if g.is_one() {
            return;
        }
    }
    if g > BigInt::one() {
        for (_, v) in col.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// `a*sa + b*sb`, merged over sorted row indices.
fn zaxpy(a: &ZVec, sa: &BigInt, b: &ZVec, sb: &BigInt) -> ZVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (r, v) = if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            let pair = (a[i].0, &a[i].1 * sa);
            i += 1;
            pair
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let pair = (b[j].0, &b[j].1 * sb);
            j += 1;
            pair
        } else {
            let pair = (a[i].0, &a[i].1 * sa + &b[j].1 * sb);
            i += 1;
            j += 1;
            pair
        };
        if !v.is_zero() {
            out.push((r, v));
        }
    }
    out
}

/// Rank of the span of a family of sparse rational columns.
///
/// Fraction-free: columns are scaled to integers, elimination uses
/// cross-multiplication with content reduction after each update. Within
/// each new pivot column the pivot row is chosen to minimize entry bit
/// size (ties broken by row index) to keep intermediate growth down.
pub fn rank_of_cols(cols: impl IntoIterator<Item = SparseVec>) -> usize {
    // pivot row -> reduced integer column with its pivot value
    let mut pivots: BTreeMap<usize, ZVec> = BTreeMap::new();
    let mut rank = 0usize;
    for col in cols {
        let mut cur = clear_denominators(&col);
        loop {
            let hit = cur.iter().find_map(|(r, _)| {
                pivots.contains_key(r).then_some(*r)
            });
            let Some(r) = hit else { break };
            let pcol = &pivots[&r];
            let plead = pcol.iter().find(|(i, _)| *i == r).unwrap().1.clone();
            let clead = cur.iter().find(|(i, _)| *i == r).unwrap().1.clone();
            cur = zaxpy(&cur, &plead, pcol, &(-clead));
            strip_content(&mut cur);
        }
        if !cur.is_empty() {
            let pr = cur
                .iter()
                .min_by_key(|(i, v)| (v.magnitude().bits(), *i))
                .map(|(i, _)| *i)
                .unwrap();
            pivots.insert(pr, cur);
            rank += 1;
        }
    }
    rank
}

/// Dimension of `span(extra ∪ base) / span(base)`.
///
/// Used for induced maps on subquotients: feed the spanning set of the
/// denominator first, then count how many of the numerator's vectors
/// enlarge the span.
pub fn rank_increment(base: &[SparseVec], extra: &[SparseVec]) -> usize {
    let base_rank = rank_of_cols(base.iter().cloned());
    let total = rank_of_cols(base.iter().chain(extra.iter()).cloned());
    total - base_rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: usize, entries: &[&[i64]]) -> SparseMat {
        let cols = entries[0].len();
        let mut t = Vec::new();
        for (r, row) in entries.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if *v != 0 {
                    t.push((r, c, qi(*v)));
                }
            }
        }
        SparseMat::from_triplets(rows, cols, t)
    }

    /// Naive rational row reduction, the oracle for the fraction-free path.
    fn rank_naive(m: &SparseMat) -> usize {
        let mut rows: Vec<Vec<Q>> = vec![vec![Q::zero(); m.ncols()]; m.rows];
        for (c, col) in m.cols.iter().enumerate() {
            for (r, v) in col {
                rows[*r][c] = v.clone();
            }
        }
        let mut rank = 0;
        for c in 0..m.ncols() {
            if let Some(p) = (rank..m.rows).find(|&r| !rows[r][c].is_zero()) {
                rows.swap(rank, p);
                let lead = rows[rank][c].clone();
                for r in 0..m.rows {
                    if r != rank && !rows[r][c].is_zero() {
                        let f = &rows[r][c] / &lead;
                        for k in c..m.ncols() {
                            let s = &rows[rank][k] * &f;
                            rows[r][k] -= s;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn rank_small_cases() {
        let m = dense(3, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank(), rank_naive(&m));
        assert_eq!(SparseMat::zero(4, 5).rank(), 0);
        assert_eq!(SparseMat::identity(7).rank(), 7);
    }

    #[test]
    fn rank_matches_naive_on_pseudorandom() {
        // deterministic congruential fill, entries in -3..=3
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        for (rows, cols) in [(5, 8), (9, 6), (12, 12)] {
            let mut t = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    let v = next();
                    if v != 0 {
                        t.push((r, c, qi(v)));
                    }
                }
            }
            let m = SparseMat::from_triplets(rows, cols, t);
            assert_eq!(m.rank(), rank_naive(&m));
        }
    }

    #[test]
    fn kernel_vectors_are_in_kernel() {
        let m = dense(3, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(m.apply(v).is_empty());
        }
        // rank-nullity
        assert_eq!(m.rank() + ker.len(), m.ncols());
    }

    #[test]
    fn mul_and_transpose() {
        let a = dense(2, &[&[1, 0, 2], &[0, 1, -1]]);
        let b = dense(3, &[&[1, 1], &[0, 2], &[1, 0]]);
        let ab = a.mul(&b);
        assert_eq!(ab.entry(0, 0), qi(3));
        assert_eq!(ab.entry(0, 1), qi(1));
        assert_eq!(ab.entry(1, 0), qi(-1));
        assert_eq!(ab.entry(1, 1), qi(2));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn rational_entries() {
        let m = SparseMat::from_triplets(
            2,
            2,
            vec![(0, 0, qr(1, 2)), (0, 1, qr(1, 3)), (1, 0, qr(3, 2)), (1, 1, qi(1))],
        );
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rank_increment_counts_quotient() {
        let base = vec![vec![(0usize, qi(1))]];
        let extra = vec![vec![(0usize, qi(2))], vec![(1usize, qi(1))]];
        assert_eq!(rank_increment(&base, &extra), 1);
    }
}
