//! Graded vector spaces with labeled bases, degree windows, and the
//! dimension tables that all homology comparisons are phrased in.

use crate::error::Error;
use std::collections::BTreeMap;
use std::fmt;

/// Homological degree. Differentials have degree -1, the Connes operator
/// degree +1, the cyclic variable `u` degree -2.
pub type Deg = i64;

/// Closed degree interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub lo: Deg,
    pub hi: Deg,
}

impl Window {
    pub fn new(lo: Deg, hi: Deg) -> Self {
        assert!(lo <= hi, "window must satisfy lo <= hi");
        Window { lo, hi }
    }

    pub fn contains(&self, n: Deg) -> bool {
        self.lo <= n && n <= self.hi
    }

    pub fn contains_window(&self, other: Window) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Largest window contained in both, if any.
    pub fn intersect(&self, other: Window) -> Option<Window> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Window { lo, hi })
    }

    /// The window `[-hi, -lo]`, where duals live.
    pub fn reflect(&self) -> Window {
        Window { lo: -self.hi, hi: -self.lo }
    }

    pub fn shift(&self, n: Deg) -> Window {
        Window { lo: self.lo + n, hi: self.hi + n }
    }

    pub fn iter(&self) -> impl Iterator<Item = Deg> {
        self.lo..=self.hi
    }

    pub fn height(&self) -> Deg {
        self.hi - self.lo
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Finitely supported family of labeled finite-dimensional rational vector
/// spaces indexed by integer degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    components: BTreeMap<Deg, Vec<String>>,
}

impl GradedSpace {
    pub fn empty() -> Self {
        GradedSpace { components: BTreeMap::new() }
    }

    /// Build from per-degree label lists. Degrees with no labels are dropped;
    /// labels must be unique within a degree.
    pub fn from_labels(components: impl IntoIterator<Item = (Deg, Vec<String>)>) -> Self {
        let mut map = BTreeMap::new();
        for (d, labels) in components {
            if labels.is_empty() {
                continue;
            }
            let mut seen = std::collections::HashSet::new();
            for l in &labels {
                assert!(seen.insert(l.clone()), "duplicate label {l:?} in degree {d}");
            }
            assert!(map.insert(d, labels).is_none(), "duplicate degree {d}");
        }
        GradedSpace { components: map }
    }

    /// One-dimensional space `k[d]` with the given label.
    pub fn line(d: Deg, label: &str) -> Self {
        GradedSpace::from_labels([(d, vec![label.to_string()])])
    }

    pub fn dim(&self, d: Deg) -> usize {
        self.components.get(&d).map_or(0, |l| l.len())
    }

    pub fn labels(&self, d: Deg) -> &[String] {
        self.components.get(&d).map_or(&[], |l| l.as_slice())
    }

    pub fn degrees(&self) -> impl Iterator<Item = Deg> + '_ {
        self.components.keys().copied()
    }

    pub fn total_dim(&self) -> usize {
        self.components.values().map(|l| l.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn min_degree(&self) -> Option<Deg> {
        self.components.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<Deg> {
        self.components.keys().next_back().copied()
    }

    pub fn dims(&self) -> BTreeMap<Deg, usize> {
        self.components.iter().map(|(d, l)| (*d, l.len())).collect()
    }

    /// Degrees raised by `n`, labels untouched.
    pub fn shifted(&self, n: Deg) -> GradedSpace {
        GradedSpace {
            components: self.components.iter().map(|(d, l)| (d + n, l.clone())).collect(),
        }
    }

    /// Reflected space with dual labels: degree `n` becomes `-n`.
    pub fn dual(&self) -> GradedSpace {
        GradedSpace {
            components: self
                .components
                .iter()
                .map(|(d, l)| (-d, l.iter().map(|s| format!("{s}^")).collect()))
                .collect(),
        }
    }

    /// Restriction to a window.
    pub fn truncated(&self, w: Window) -> GradedSpace {
        GradedSpace {
            components: self
                .components
                .iter()
                .filter(|(d, _)| w.contains(**d))
                .map(|(d, l)| (*d, l.clone()))
                .collect(),
        }
    }
}

/// Map degree -> homology dimension, valid exactly on `valid_window`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimTable {
    dims: BTreeMap<Deg, usize>,
    pub valid_window: Window,
}

impl DimTable {
    pub fn new(valid_window: Window, entries: impl IntoIterator<Item = (Deg, usize)>) -> Self {
        let dims = entries
            .into_iter()
            .filter(|(d, n)| valid_window.contains(*d) && *n > 0)
            .collect();
        DimTable { dims, valid_window }
    }

    pub fn dim(&self, d: Deg) -> usize {
        self.dims.get(&d).copied().unwrap_or(0)
    }

    pub fn get_checked(&self, d: Deg) -> Result<usize, Error> {
        if self.valid_window.contains(d) {
            Ok(self.dim(d))
        } else {
            Err(Error::WindowUnderflow { degree: d, valid: self.valid_window })
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (Deg, usize)> + '_ {
        self.dims.iter().map(|(d, n)| (*d, *n))
    }

    /// Equal on the intersection of the two valid windows; errors if the
    /// requested window is not covered by both.
    pub fn agrees_with(&self, other: &DimTable, w: Window) -> Result<bool, Error> {
        for t in [self, other] {
            if !t.valid_window.contains_window(w) {
                return Err(Error::WindowUnderflow { degree: w.lo, valid: t.valid_window });
            }
        }
        Ok(w.iter().all(|d| self.dim(d) == other.dim(d)))
    }

    /// Pointwise sum (used for Kunneth-style cross-checks in tests).
    pub fn convolve(&self, other: &DimTable, w: Window) -> DimTable {
        let mut out = BTreeMap::new();
        for (d1, n1) in self.entries() {
            for (d2, n2) in other.entries() {
                if w.contains(d1 + d2) {
                    *out.entry(d1 + d2).or_insert(0) += n1 * n2;
                }
            }
        }
        DimTable { dims: out, valid_window: w }
    }

    pub fn shifted(&self, n: Deg) -> DimTable {
        DimTable {
            dims: self.dims.iter().map(|(d, v)| (d + n, *v)).collect(),
            valid_window: self.valid_window.shift(n),
        }
    }

    pub fn reflected(&self) -> DimTable {
        DimTable {
            dims: self.dims.iter().map(|(d, v)| (-d, *v)).collect(),
            valid_window: self.valid_window.reflect(),
        }
    }
}

impl fmt::Display for DimTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for d in self.valid_window.iter() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{}: {}", d, self.dim(d))?;
            first = false;
        }
        write!(f, "}} on {}", self.valid_window)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_ops() {
        let w = Window::new(-2, 3);
        assert!(w.contains(0) && w.contains(-2) && w.contains(3));
        assert!(!w.contains(4));
        assert_eq!(w.reflect(), Window::new(-3, 2));
        assert_eq!(w.intersect(Window::new(0, 10)), Some(Window::new(0, 3)));
        assert_eq!(w.intersect(Window::new(7, 10)), None);
    }

    #[test]
    fn graded_space_basics() {
        let v = GradedSpace::from_labels([(0, vec!["a".into(), "b".into()]), (2, vec!["c".into()])]);
        assert_eq!(v.dim(0), 2);
        assert_eq!(v.dim(1), 0);
        assert_eq!(v.total_dim(), 3);
        assert_eq!(v.shifted(3).dim(5), 1);
        assert_eq!(v.dual().dim(-2), 1);
        assert_eq!(v.dual().dual().dims(), v.dims());
    }

    #[test]
    #[should_panic(expected = "duplicate label")]
    fn duplicate_labels_rejected() {
        GradedSpace::from_labels([(0, vec!["a".into(), "a".into()])]);
    }

    #[test]
    fn dimtable_comparison() {
        let w = Window::new(0, 3);
        let a = DimTable::new(w, [(0, 1), (2, 5)]);
        let b = DimTable::new(w, [(0, 1), (2, 5)]);
        assert!(a.agrees_with(&b, w).unwrap());
        let c = DimTable::new(w, [(0, 1)]);
        assert!(!a.agrees_with(&c, w).unwrap());
        assert!(a.agrees_with(&c, Window::new(4, 5)).is_err());
    }
}
