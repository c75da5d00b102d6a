//! Chain complexes over `Q`: construction, the standard functors
//! (shift, dual, tensor, sum, cone), exact homology dimensions in a
//! window, and mixed complexes with their cyclic `u`-total complexes.

use crate::error::Error;
use crate::gmap::{GradedMap, MapBuilder};
use crate::graded::{Deg, DimTable, GradedSpace, Window};
use crate::linalg::Q;
use crate::signs;
use num::One;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// A chain complex: graded space plus a degree -1 differential with
/// `d ∘ d = 0` exactly.
///
/// `valid` is the window on which the materialized data agrees with the
/// (possibly infinite) object being modeled; `None` means the object is
/// exactly this finite complex. `support_lo`/`support_hi` are certified
/// bounds on the true support, used to certify windows of derived
/// constructions.
#[derive(Clone, Debug)]
pub struct Complex {
    pub space: GradedSpace,
    pub d: GradedMap,
    pub valid: Option<Window>,
    pub support_lo: Option<Deg>,
    pub support_hi: Option<Deg>,
}

impl Complex {
    /// A finite complex, validated: shapes line up and `d^2 = 0`.
    pub fn new(space: GradedSpace, d: GradedMap) -> Result<Self, Error> {
        let c = Complex {
            support_lo: space.min_degree(),
            support_hi: space.max_degree(),
            space,
            d,
            valid: None,
        };
        c.check()?;
        Ok(c)
    }

    /// A truncated model of an infinite object, validated on what is stored.
    pub fn new_truncated(
        space: GradedSpace,
        d: GradedMap,
        valid: Window,
        support_lo: Option<Deg>,
        support_hi: Option<Deg>,
    ) -> Result<Self, Error> {
        let c = Complex { space, d, valid: Some(valid), support_lo, support_hi };
        c.check()?;
        Ok(c)
    }

    fn check(&self) -> Result<(), Error> {
        if self.d.degree != -1 {
            return Err(Error::Invalid("differential must have degree -1".into()));
        }
        for n in self.space.degrees() {
            if self.d.src_dim(n) != self.space.dim(n) || self.d.tgt_dim(n) != self.space.dim(n) {
                return Err(Error::Invalid(format!(
                    "differential shape does not match space at degree {n}"
                )));
            }
        }
        let offenders: Vec<Deg> = self
            .d
            .block_degrees()
            .collect::<Vec<_>>()
            .par_iter()
            .filter(|&&n| {
                let sq = self.d.block(n - 1).mul(&self.d.block(n));
                !sq.is_zero()
            })
            .copied()
            .collect();
        if let Some(n) = offenders.first() {
            return Err(Error::Invalid(format!("d∘d != 0 at degree {n}")));
        }
        Ok(())
    }

    pub fn zero() -> Complex {
        Complex {
            space: GradedSpace::empty(),
            d: GradedMap::zero(-1, &GradedSpace::empty(), &GradedSpace::empty()),
            valid: None,
            support_lo: None,
            support_hi: None,
        }
    }

    /// `k` placed in degree `d`.
    pub fn line(deg: Deg, label: &str) -> Complex {
        let space = GradedSpace::line(deg, label);
        let d = GradedMap::zero(-1, &space, &space);
        Complex { space, d, valid: None, support_lo: Some(deg), support_hi: Some(deg) }
    }

    /// Graded space with zero differential.
    pub fn with_zero_diff(space: GradedSpace) -> Complex {
        let d = GradedMap::zero(-1, &space, &space);
        Complex {
            support_lo: space.min_degree(),
            support_hi: space.max_degree(),
            space,
            d,
            valid: None,
        }
    }

    pub fn dim(&self, n: Deg) -> usize {
        self.space.dim(n)
    }

    /// Window on which homology can be certified: needs exact spaces at
    /// `n-1, n, n+1` for every `n` in the window.
    fn homology_certified(&self, w: Window) -> Result<(), Error> {
        if let Some(v) = self.valid {
            let needed = Window::new(w.lo - 1, w.hi + 1);
            if !v.contains_window(needed) {
                return Err(Error::WindowUnderflow { degree: w.lo - 1, valid: v });
            }
        }
        Ok(())
    }

    /// Homology dimensions on `w`: `dim ker(d_n) - rank(d_{n+1})`, ranks by
    /// fraction-free elimination, degrees in parallel.
    pub fn homology_dims(&self, w: Window) -> Result<DimTable, Error> {
        self.homology_certified(w)?;
        let ranks: BTreeMap<Deg, usize> = (w.lo..=w.hi + 1)
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&n| (n, self.d.block_ref(n).map_or(0, |b| b.rank())))
            .collect();
        let mut dims = Vec::new();
        for n in w.iter() {
            let total = self.space.dim(n);
            let h = total - ranks[&n] - ranks[&(n + 1)];
            dims.push((n, h));
        }
        Ok(DimTable::new(w, dims))
    }

    /// Degrees raised by `n`; differential rescaled by `(-1)^n`.
    pub fn shift(&self, n: Deg) -> Complex {
        Complex {
            space: self.space.shifted(n),
            d: self.d.reindexed(n, &signs::shift_diff(n)),
            valid: self.valid.map(|w| w.shift(n)),
            support_lo: self.support_lo.map(|d| d + n),
            support_hi: self.support_hi.map(|d| d + n),
        }
    }

    /// Degreewise dual: `(X^∨)_n = (X_{-n})^∨` with
    /// `(dφ)(x) = -(-1)^{|φ|} φ(dx)`.
    pub fn dual(&self) -> Complex {
        let space = self.space.dual();
        let mut d = GradedMap::zero(-1, &space, &space);
        for n in self.d.block_degrees().collect::<Vec<_>>() {
            // block d_n : X_n -> X_{n-1} dualizes to a block at degree -(n-1)
            let m = -n + 1;
            let block = self.d.block(n).transpose().scale(&signs::dual_diff(m));
            d.set_block(m, block);
        }
        Complex {
            space,
            d,
            valid: self.valid.map(|w| w.reflect()),
            support_lo: self.support_hi.map(|d| -d),
            support_hi: self.support_lo.map(|d| -d),
        }
    }

    fn lo_bound(&self) -> Option<Deg> {
        match self.valid {
            None => self.space.min_degree().or(Some(0)),
            Some(_) => self.support_lo,
        }
    }

    fn hi_bound(&self) -> Option<Deg> {
        match self.valid {
            None => Some(self.space.max_degree().unwrap_or(0)),
            Some(_) => self.support_hi,
        }
    }

    /// Tensor product restricted to `w`, with the certified window computed
    /// from the inputs' validity and support bounds.
    pub fn tensor(&self, other: &Complex, w: Window) -> Result<Complex, Error> {
        let mut labels: BTreeMap<Deg, Vec<String>> = BTreeMap::new();
        // basis at degree n: (p, i, q, j) with p + q = n, ordered by p then i then j
        let mut index: BTreeMap<(Deg, usize, usize), usize> = BTreeMap::new();
        let degs_x: Vec<Deg> = self.space.degrees().collect();
        for n in w.iter() {
            let mut at_n = Vec::new();
            for &p in &degs_x {
                let q = n - p;
                for i in 0..self.space.dim(p) {
                    for j in 0..other.space.dim(q) {
                        index.insert((p, i, j), at_n.len());
                        at_n.push(format!(
                            "{}⊗{}",
                            self.space.labels(p)[i],
                            other.space.labels(q)[j]
                        ));
                    }
                }
            }
            if !at_n.is_empty() {
                labels.insert(n, at_n);
            }
        }
        let space = GradedSpace::from_labels(labels);
        let mut b = MapBuilder::new(-1, &space, &space);
        for n in w.iter() {
            if !w.contains(n - 1) {
                continue;
            }
            for &p in &degs_x {
                let q = n - p;
                for i in 0..self.space.dim(p) {
                    for j in 0..other.space.dim(q) {
                        let col = index[&(p, i, j)];
                        // da ⊗ b
                        for (i2, c) in self.d.apply(p, &vec![(i, Q::one())]) {
                            if let Some(&row) = index.get(&(p - 1, i2, j)) {
                                b.push(n, col, row, c);
                            }
                        }
                        // (-1)^{|a|} a ⊗ db
                        let s = signs::sign(p);
                        for (j2, c) in other.d.apply(q, &vec![(j, Q::one())]) {
                            if let Some(&row) = index.get(&(p, i, j2)) {
                                b.push(n, col, row, c * &s);
                            }
                        }
                    }
                }
            }
        }
        // a tensor degree is exact when every potentially nonzero pair
        // (p, n-p) of true components is materialized exactly
        let certified = |n: Deg| -> bool {
            let (Some(xlo), Some(ylo)) = (self.lo_bound(), other.lo_bound()) else {
                return false;
            };
            let p_lo = match other.hi_bound() {
                Some(yhi) => xlo.max(n - yhi),
                None => xlo,
            };
            let p_hi = match self.hi_bound() {
                Some(xhi) => xhi.min(n - ylo),
                None => n - ylo,
            };
            for p in p_lo..=p_hi {
                let q = n - p;
                if let Some(v) = self.valid {
                    if !v.contains(p) {
                        return false;
                    }
                }
                if let Some(v) = other.valid {
                    if !v.contains(q) {
                        return false;
                    }
                }
            }
            true
        };
        let support_lo = match (self.lo_bound(), other.lo_bound()) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        let support_hi = match (self.hi_bound(), other.hi_bound()) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        if self.valid.is_none() && other.valid.is_none() {
            if let (Some(lo), Some(hi)) = (support_lo, support_hi) {
                if w.lo <= lo && hi <= w.hi {
                    // the whole object fits in the window
                    return Complex::new(space, b.finish());
                }
            }
            return Complex::new_truncated(space, b.finish(), w, support_lo, support_hi);
        }
        let good: Vec<Deg> = w.iter().filter(|&n| certified(n)).collect();
        let valid = match (good.first(), good.last()) {
            (Some(&lo), Some(&hi)) if (hi - lo + 1) as usize == good.len() => Window::new(lo, hi),
            _ => {
                return Err(Error::TruncationInsufficient(
                    "tensor window cannot be certified".into(),
                ))
            }
        };
        Complex::new_truncated(space, b.finish(), valid, support_lo, support_hi)
    }

    pub fn direct_sum(&self, other: &Complex) -> Complex {
        let mut labels: BTreeMap<Deg, Vec<String>> = BTreeMap::new();
        let mut degs: Vec<Deg> = self.space.degrees().chain(other.space.degrees()).collect();
        degs.sort_unstable();
        degs.dedup();
        for &n in &degs {
            let mut at_n: Vec<String> =
                self.space.labels(n).iter().map(|l| format!("L:{l}")).collect();
            at_n.extend(other.space.labels(n).iter().map(|l| format!("R:{l}")));
            labels.insert(n, at_n);
        }
        let space = GradedSpace::from_labels(labels);
        let mut b = MapBuilder::new(-1, &space, &space);
        for &n in &degs {
            let off_src = self.space.dim(n);
            let off_tgt = self.space.dim(n - 1);
            if let Some(blk) = self.d.block_ref(n) {
                for (c, col) in blk.cols.iter().enumerate() {
                    for (r, v) in col {
                        b.push(n, c, *r, v.clone());
                    }
                }
            }
            if let Some(blk) = other.d.block_ref(n) {
                for (c, col) in blk.cols.iter().enumerate() {
                    for (r, v) in col {
                        b.push(n, c + off_src, *r + off_tgt, v.clone());
                    }
                }
            }
        }
        let valid = match (self.valid, other.valid) {
            (None, None) => None,
            (a, b2) => {
                let wa = a.unwrap_or(Window::new(Deg::MIN / 4, Deg::MAX / 4));
                let wb = b2.unwrap_or(Window::new(Deg::MIN / 4, Deg::MAX / 4));
                wa.intersect(wb)
            }
        };
        Complex {
            space,
            d: b.finish(),
            valid,
            support_lo: self.support_lo.min(other.support_lo),
            support_hi: match (self.support_hi, other.support_hi) {
                (Some(a), Some(b)) => Some(a.max(b)),
                _ => None,
            },
        }
    }

    /// Verify that `f` (of even degree) is a chain map `self -> other`.
    pub fn check_chain_map(&self, other: &Complex, f: &GradedMap) -> Result<(), Error> {
        let s = signs::sign(f.degree);
        for n in self.space.degrees() {
            let lhs = f.block(n - 1).mul(&self.d.block(n)).scale(&s);
            let rhs = other.d.block(n + f.degree).mul(&f.block(n));
            if lhs != rhs {
                return Err(Error::NotChainMap { degree: n });
            }
        }
        Ok(())
    }

    /// Mapping cone of a degree-0 chain map: `Y_n ⊕ X_{n-1}` with
    /// `d(y, x) = (dy + f x, -dx)`.
    pub fn cone(&self, other: &Complex, f: &GradedMap) -> Result<Complex, Error> {
        assert_eq!(f.degree, 0, "cone expects a degree-0 map");
        self.check_chain_map(other, f)?;
        let x = self;
        let y = other;
        let mut labels: BTreeMap<Deg, Vec<String>> = BTreeMap::new();
        let mut degs: Vec<Deg> = y
            .space
            .degrees()
            .chain(x.space.degrees().map(|d| d + 1))
            .collect();
        degs.sort_unstable();
        degs.dedup();
        for &n in &degs {
            let mut at_n: Vec<String> = y.space.labels(n).iter().map(|l| format!("Y:{l}")).collect();
            at_n.extend(x.space.labels(n - 1).iter().map(|l| format!("sX:{l}")));
            labels.insert(n, at_n);
        }
        let space = GradedSpace::from_labels(labels);
        let mut b = MapBuilder::new(-1, &space, &space);
        for &n in &degs {
            let y_src = y.space.dim(n);
            let y_tgt = y.space.dim(n - 1);
            if let Some(blk) = y.d.block_ref(n) {
                for (c, col) in blk.cols.iter().enumerate() {
                    for (r, v) in col {
                        b.push(n, c, *r, v.clone());
                    }
                }
            }
            // f: X_{n-1} -> Y_{n-1}
            if let Some(blk) = f.block_ref(n - 1) {
                for (c, col) in blk.cols.iter().enumerate() {
                    for (r, v) in col {
                        b.push(n, c + y_src, *r, v.clone());
                    }
                }
            }
            if let Some(blk) = x.d.block_ref(n - 1) {
                for (c, col) in blk.cols.iter().enumerate() {
                    for (r, v) in col {
                        b.push(n, c + y_src, *r + y_tgt, -v.clone());
                    }
                }
            }
        }
        let valid = match (y.valid, x.valid.map(|w| w.shift(1))) {
            (None, None) => None,
            (a, b2) => {
                let wa = a.unwrap_or(Window::new(Deg::MIN / 4, Deg::MAX / 4));
                let wb = b2.unwrap_or(Window::new(Deg::MIN / 4, Deg::MAX / 4));
                wa.intersect(wb)
            }
        };
        let c = Complex {
            space,
            d: b.finish(),
            valid,
            support_lo: None,
            support_hi: None,
        };
        c.check()?;
        Ok(c)
    }

    /// `f : self -> other` is a quasi-isomorphism on `w` iff the cone has
    /// zero homology there.
    pub fn is_quasi_iso_in_window(
        &self,
        other: &Complex,
        f: &GradedMap,
        w: Window,
    ) -> Result<bool, Error> {
        let cone = self.cone(other, f)?;
        let h = cone.homology_dims(w)?;
        Ok(w.iter().all(|n| h.dim(n) == 0))
    }
}

/// A complex with a square-zero degree +1 operator anti-commuting with `d`.
#[derive(Clone, Debug)]
pub struct MixedComplex {
    pub complex: Complex,
    pub b_op: GradedMap,
    /// Degrees where the stored `b_op` blocks are exact for the modeled object.
    pub b_valid: Window,
}

impl MixedComplex {
    /// Validates `B∘B = 0` and `d∘B + B∘d = 0` on every degree where all
    /// participating blocks lie inside `b_valid`.
    pub fn new(complex: Complex, b_op: GradedMap, b_valid: Window) -> Result<Self, Error> {
        if b_op.degree != 1 {
            return Err(Error::Invalid("Connes-type operator must have degree +1".into()));
        }
        let m = MixedComplex { complex, b_op, b_valid };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<(), Error> {
        let w = self.b_valid;
        // only materialized degrees (and their neighbors) can carry
        // nonzero blocks; b_valid may extend far into known-zero regions
        let mut degrees: Vec<Deg> = self
            .complex
            .space
            .degrees()
            .flat_map(|n| [n - 1, n, n + 1])
            .filter(|n| w.contains(*n))
            .collect();
        degrees.sort_unstable();
        degrees.dedup();
        let bad: Vec<String> = degrees
            .par_iter()
            .flat_map(|&n| {
                let mut errs = Vec::new();
                if w.contains(n + 1) {
                    let bb = self.b_op.block(n + 1).mul(&self.b_op.block(n));
                    if !bb.is_zero() {
                        errs.push(format!("B∘B != 0 at degree {n}"));
                    }
                }
                if w.contains(n - 1) {
                    let db = self.complex.d.block(n + 1).mul(&self.b_op.block(n));
                    let bd = self.b_op.block(n - 1).mul(&self.complex.d.block(n));
                    if !db.add(&bd).is_zero() {
                        errs.push(format!("d∘B + B∘d != 0 at degree {n}"));
                    }
                }
                errs
            })
            .collect();
        if let Some(e) = bad.first() {
            return Err(Error::Invalid(e.clone()));
        }
        Ok(())
    }

    /// A finite complex with `B = 0`.
    pub fn trivial(complex: Complex) -> MixedComplex {
        let b_op = GradedMap::zero(1, &complex.space, &complex.space);
        let lo = complex.space.min_degree().unwrap_or(0);
        let hi = complex.space.max_degree().unwrap_or(0);
        MixedComplex { complex, b_op, b_valid: Window::new(lo, hi) }
    }
}

/// The three `u`-total complexes of a mixed complex. Each table comes with
/// its own certified window; a variant whose certified window misses the
/// request entirely reports `TruncationInsufficient`.
pub struct CyclicTables {
    pub cyclic: Result<DimTable, Error>,
    pub negative: Result<DimTable, Error>,
    pub periodic: Result<DimTable, Error>,
}

/// Homology of `(M[u-powers], d + uB)` in the three standard truncation
/// patterns; `u` has degree -2. Powers `u^j` for `j` in `[j_min, j_max]`:
/// cyclic `[-u_bound, 0]`, negative `[0, u_bound]`, periodic both.
pub fn cyclic_variants(m: &MixedComplex, u_bound: usize, w: Window) -> CyclicTables {
    let ub = u_bound as Deg;
    CyclicTables {
        cyclic: u_total_homology(m, -ub, 0, None, Some(0), w),
        negative: u_total_homology(m, 0, ub, Some(0), None, w),
        periodic: u_total_homology(m, -ub, ub, None, None, w),
    }
}

fn u_total_homology(
    m: &MixedComplex,
    j_min: Deg,
    j_max: Deg,
    pattern_lo: Option<Deg>,
    pattern_hi: Option<Deg>,
    w: Window,
) -> Result<DimTable, Error> {
    use num::Integer;
    let c = &m.complex;
    // A total degree n is exact when every potentially nonzero component
    // u^j M_{n+2j} of the *untruncated* pattern has j in [j_min, j_max],
    // lies in the valid window, and carries exact B data where the pattern
    // has an outgoing u·B arrow.
    let true_lo = c.lo_bound();
    let true_hi = c.hi_bound();
    let certified = |n: Deg| -> bool {
        // j range with n + 2j inside the true support, clamped to the
        // untruncated pattern; must end up finite
        let need_lo = match (true_lo.map(|lo| Integer::div_ceil(&(lo - n), &2)), pattern_lo) {
            (Some(a), Some(b)) => a.max(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => return false,
        };
        let need_hi = match (true_hi.map(|hi| Integer::div_floor(&(hi - n), &2)), pattern_hi) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => return false,
        };
        if need_lo > need_hi {
            return true; // the true object has no components here
        }
        if need_lo < j_min || need_hi > j_max {
            return false;
        }
        for j in need_lo..=need_hi {
            let deg = n + 2 * j;
            if let Some(v) = c.valid {
                if !v.contains(deg) {
                    return false;
                }
            }
            // outgoing u·B arrow exists in the pattern at power j+1
            let arrow = pattern_hi.is_none_or(|p| j + 1 <= p);
            if arrow && c.space.dim(deg) > 0 && !m.b_valid.contains(deg) {
                return false;
            }
        }
        true
    };
    // homology at n needs exactness at n-1, n, n+1
    let good: Vec<Deg> = w.iter().filter(|&n| certified(n - 1) && certified(n) && certified(n + 1)).collect();
    let (Some(&lo), Some(&hi)) = (good.first(), good.last()) else {
        return Err(Error::TruncationInsufficient(format!(
            "no degree of {w} is certified for this u-pattern"
        )));
    };
    if (hi - lo + 1) as usize != good.len() {
        return Err(Error::TruncationInsufficient(
            "certified degrees do not form a window".into(),
        ));
    }
    let wc = Window::new(lo, hi);

    // Build the total complex on [lo-1, hi+1].
    let mut labels: BTreeMap<Deg, Vec<String>> = BTreeMap::new();
    let mut index: BTreeMap<(Deg, Deg, usize), usize> = BTreeMap::new();
    for n in (wc.lo - 1)..=(wc.hi + 1) {
        let mut at_n = Vec::new();
        for j in j_min..=j_max {
            let deg = n + 2 * j;
            for i in 0..c.space.dim(deg) {
                index.insert((n, j, i), at_n.len());
                at_n.push(format!("u^{}·{}", j, c.space.labels(deg)[i]));
            }
        }
        if !at_n.is_empty() {
            labels.insert(n, at_n);
        }
    }
    let space = GradedSpace::from_labels(labels);
    let mut bld = MapBuilder::new(-1, &space, &space);
    for n in (wc.lo)..=(wc.hi + 1) {
        for j in j_min..=j_max {
            let deg = n + 2 * j;
            for i in 0..c.space.dim(deg) {
                let col = index[&(n, j, i)];
                for (i2, v) in c.d.apply(deg, &vec![(i, Q::one())]) {
                    if let Some(&row) = index.get(&(n - 1, j, i2)) {
                        bld.push(n, col, row, v);
                    }
                }
                // u·B : lands in power j+1, total degree n-1
                if j + 1 <= j_max {
                    for (i2, v) in m.b_op.apply(deg, &vec![(i, Q::one())]) {
                        if let Some(&row) = index.get(&(n - 1, j + 1, i2)) {
                            bld.push(n, col, row, v);
                        }
                    }
                }
            }
        }
    }
    // every total degree in the built range is certified, so the stored
    // data is exact on all of it
    let total = Complex::new_truncated(
        space,
        bld.finish(),
        Window::new(wc.lo - 1, wc.hi + 1),
        None,
        None,
    )?;
    total.homology_dims(wc.intersect(w).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{qi, SparseMat};

    fn two_term_acyclic() -> Complex {
        // k --1--> k in degrees 1, 0
        let space = GradedSpace::from_labels([(0, vec!["x".into()]), (1, vec!["y".into()])]);
        let mut d = GradedMap::zero(-1, &space, &space);
        d.set_block(1, SparseMat::from_triplets(1, 1, vec![(0, 0, qi(1))]));
        Complex::new(space, d).unwrap()
    }

    #[test]
    fn homology_trivial_cases() {
        let w = Window::new(0, 3);
        assert!(Complex::zero()
            .homology_dims(w)
            .unwrap()
            .entries()
            .all(|(_, n)| n == 0));

        let k = Complex::line(0, "1");
        let h = k.homology_dims(Window::new(0, 2)).unwrap();
        assert_eq!(h.dim(0), 1);
        assert_eq!(h.dim(1), 0);

        let acyclic = two_term_acyclic();
        let h = acyclic.homology_dims(Window::new(0, 1)).unwrap();
        assert_eq!((h.dim(0), h.dim(1)), (0, 0));
    }

    #[test]
    fn shift_moves_homology() {
        let k = Complex::line(0, "1");
        let s = k.shift(3);
        assert_eq!(s.homology_dims(Window::new(3, 3)).unwrap().dim(3), 1);
        let a = two_term_acyclic().shift(2).shift(-5);
        assert_eq!(a.space.min_degree(), Some(-3));
        // double shift composes
        let b = two_term_acyclic().shift(-3);
        assert_eq!(a.space.dims(), b.space.dims());
        assert!(a.d.equals(&b.d));
    }

    #[test]
    fn dual_reflects_homology() {
        let k3 = Complex::line(3, "z");
        assert_eq!(k3.dual().homology_dims(Window::new(-3, -3)).unwrap().dim(-3), 1);
        let a = two_term_acyclic();
        let da = a.dual();
        let h = da.homology_dims(Window::new(-1, 0)).unwrap();
        assert_eq!((h.dim(-1), h.dim(0)), (0, 0));
        // dualizing twice returns the original dims
        assert_eq!(da.dual().space.dims(), a.space.dims());
    }

    #[test]
    fn tensor_unit_and_kunneth() {
        let k = Complex::line(0, "1");
        let a = two_term_acyclic();
        let t = k.tensor(&a, Window::new(0, 1)).unwrap();
        assert_eq!(t.space.dims(), a.space.dims());
        let h = t.homology_dims(Window::new(0, 0)).unwrap();
        assert_eq!(h.dim(0), 0);

        // (k ⊕ k[1])^{⊗2}: dims 1,2,1 with zero differential
        let v = Complex::with_zero_diff(GradedSpace::from_labels([
            (0, vec!["a".into()]),
            (1, vec!["b".into()]),
        ]));
        let t = v.tensor(&v, Window::new(0, 2)).unwrap();
        let h = t.homology_dims(Window::new(0, 2)).unwrap();
        assert_eq!((h.dim(0), h.dim(1), h.dim(2)), (1, 2, 1));
    }

    #[test]
    fn quasi_iso_detection() {
        let k = Complex::line(0, "1");
        let id = {
            let mut f = GradedMap::zero(0, &k.space, &k.space);
            f.set_block(0, SparseMat::identity(1));
            f
        };
        assert!(k.is_quasi_iso_in_window(&k, &id, Window::new(0, 1)).unwrap());
        let z = GradedMap::zero(0, &k.space, &k.space);
        assert!(!k.is_quasi_iso_in_window(&k, &z, Window::new(0, 1)).unwrap());
    }

    #[test]
    fn non_chain_map_rejected() {
        let a = two_term_acyclic();
        let k = Complex::line(0, "1");
        // x -> 1 but y -> 0 fails d-compatibility
        let mut f = GradedMap::zero(0, &a.space, &k.space);
        f.set_block(0, SparseMat::identity(1));
        assert!(matches!(
            a.check_chain_map(&k, &f),
            Err(Error::NotChainMap { degree: 1 })
        ));
    }

    #[test]
    fn cyclic_patterns_of_ground_field() {
        let m = MixedComplex::trivial(Complex::line(0, "1"));
        let t = cyclic_variants(&m, 3, Window::new(-5, 5));
        let hc = t.cyclic.unwrap();
        // u^{-j}: dims 1 at 0, 2, 4 within the window
        for n in -5..=5 {
            assert_eq!(hc.dim(n), usize::from(n >= 0 && n % 2 == 0 && n <= 6));
        }
        let hn = t.negative.unwrap();
        for n in hn.valid_window.iter() {
            assert_eq!(hn.dim(n), usize::from(n <= 0 && n % 2 == 0 && n >= -6));
        }
        let hp = t.periodic.unwrap();
        for n in hp.valid_window.iter() {
            assert_eq!(hp.dim(n), usize::from(n % 2 == 0));
        }
    }
}
