//! Dg algebras and dg Lie algebras with sparse structure constants,
//! their validators, and the standard constructors.

use crate::complex::Complex;
use crate::error::Error;
use crate::gmap::MapBuilder;
use crate::graded::{Deg, GradedSpace, Window};
use crate::linalg::{collect_sparse, Q, SparseVec};
use crate::signs;
use num::{One, Zero};
use std::collections::BTreeMap;

/// Sparse structure constants on a global basis index set.
pub type Structure = BTreeMap<(usize, usize), SparseVec>;

/// An associative dg algebra with labeled basis and exact rational
/// structure constants. The unit is a basis element; the span of the
/// remaining basis elements is the canonical unit complement used for
/// normalization everywhere downstream.
#[derive(Clone, Debug)]
pub struct DgAlgebra {
    pub name: String,
    elements: Vec<(String, Deg)>,
    unit: usize,
    diff: Vec<SparseVec>,
    mult: Structure,
    pub commutative: bool,
    aug: Option<Vec<Q>>,
    /// Window where the stored data models the intended object exactly;
    /// `None` when the algebra is exactly this finite object.
    pub valid: Option<Window>,
    /// Certified support bounds of the true object.
    pub support_lo: Option<Deg>,
    pub support_hi: Option<Deg>,
}

/// One failed axiom with a human-readable witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub witness: String,
}

/// Validation outcome: empty iff the structure satisfies every axiom.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, axiom: &str, witness: String) {
        self.violations.push(Violation { axiom: axiom.to_string(), witness });
    }

    pub fn into_result(self) -> Result<(), Error> {
        if self.is_valid() {
            Ok(())
        } else {
            let lines: Vec<String> = self
                .violations
                .iter()
                .take(20)
                .map(|v| format!("  {}: {}", v.axiom, v.witness))
                .collect();
            Err(Error::Invalid(lines.join("\n")))
        }
    }
}

impl DgAlgebra {
    /// Assemble an algebra from raw parts. Structure constants are
    /// normalized (zeros dropped); degree homogeneity is enforced here,
    /// algebra axioms by [`validate_dga`].
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        name: &str,
        elements: Vec<(String, Deg)>,
        unit: usize,
        diff: Vec<SparseVec>,
        mult: Structure,
        commutative: bool,
        aug: Option<Vec<Q>>,
        valid: Option<Window>,
    ) -> Result<DgAlgebra, Error> {
        if unit >= elements.len() || elements[unit].1 != 0 {
            return Err(Error::Invalid("unit must be a basis element of degree 0".into()));
        }
        if diff.len() != elements.len() {
            return Err(Error::Invalid("differential table length mismatch".into()));
        }
        let degs: Vec<Deg> = elements.iter().map(|(_, d)| *d).collect();
        let (support_lo, support_hi) = if valid.is_none() {
            (degs.iter().min().copied(), degs.iter().max().copied())
        } else {
            (None, None)
        };
        let a = DgAlgebra {
            name: name.to_string(),
            elements,
            unit,
            diff: diff.into_iter().map(collect_sparse).collect(),
            mult: mult
                .into_iter()
                .map(|(k, v)| (k, collect_sparse(v)))
                .filter(|(_, v)| !v.is_empty())
                .collect(),
            commutative,
            aug,
            valid,
            support_lo,
            support_hi,
        };
        for ((i, j), v) in &a.mult {
            let want = a.deg(*i) + a.deg(*j);
            for (k, _) in v {
                if a.deg(*k) != want {
                    return Err(Error::Invalid(format!(
                        "product {}·{} is not homogeneous",
                        a.label(*i),
                        a.label(*j)
                    )));
                }
            }
        }
        for (i, v) in a.diff.iter().enumerate() {
            for (k, _) in v {
                if a.deg(*k) != a.deg(i) - 1 {
                    return Err(Error::Invalid(format!("d({}) is not homogeneous", a.label(i))));
                }
            }
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn deg(&self, i: usize) -> Deg {
        self.elements[i].1
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i].0
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn elements(&self) -> &[(String, Deg)] {
        &self.elements
    }

    /// Indices of the canonical unit complement (all non-unit elements).
    pub fn ideal_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| i != self.unit).collect()
    }

    pub fn d_elem(&self, i: usize) -> &[(usize, Q)] {
        &self.diff[i]
    }

    pub fn d_vec(&self, v: &[(usize, Q)]) -> SparseVec {
        collect_sparse(v.iter().flat_map(|(i, c)| {
            self.diff[*i].iter().map(move |(k, q)| (*k, q * c))
        }))
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, Q)] {
        static EMPTY: &[(usize, Q)] = &[];
        self.mult.get(&(i, j)).map_or(EMPTY, |v| v.as_slice())
    }

    pub fn product_vec(&self, a: &[(usize, Q)], b: &[(usize, Q)]) -> SparseVec {
        collect_sparse(a.iter().flat_map(|(i, ci)| {
            b.iter().flat_map(move |(j, cj)| {
                self.product(*i, *j).iter().map(move |(k, q)| (*k, q * ci * cj))
            })
        }))
    }

    pub fn augmentation(&self) -> Option<&[Q]> {
        self.aug.as_deref()
    }

    pub fn aug_of(&self, i: usize) -> Q {
        self.aug.as_ref().map_or_else(Q::zero, |a| a[i].clone())
    }

    /// Strip the unit coordinate: the projection `A -> Ī` along `k·1`.
    pub fn project_ideal(&self, v: SparseVec) -> SparseVec {
        v.into_iter().filter(|(i, _)| *i != self.unit).collect()
    }

    /// Per-degree basis index lists.
    pub fn by_degree(&self) -> BTreeMap<Deg, Vec<usize>> {
        let mut m: BTreeMap<Deg, Vec<usize>> = BTreeMap::new();
        for (i, (_, d)) in self.elements.iter().enumerate() {
            m.entry(*d).or_default().push(i);
        }
        m
    }

    /// Underlying complex view.
    pub fn complex(&self) -> Result<Complex, Error> {
        let by_deg = self.by_degree();
        let pos: BTreeMap<usize, (Deg, usize)> = by_deg
            .iter()
            .flat_map(|(d, idxs)| idxs.iter().enumerate().map(move |(p, i)| (*i, (*d, p))))
            .collect();
        let space = GradedSpace::from_labels(
            by_deg
                .iter()
                .map(|(d, idxs)| (*d, idxs.iter().map(|i| self.label(*i).to_string()).collect())),
        );
        let mut b = MapBuilder::new(-1, &space, &space);
        for (i, dv) in self.diff.iter().enumerate() {
            let (sd, sp) = pos[&i];
            for (k, c) in dv {
                let (_, tp) = pos[k];
                b.push(sd, sp, tp, c.clone());
            }
        }
        match self.valid {
            None => Complex::new(space, b.finish()),
            Some(w) => Complex::new_truncated(space, b.finish(), w, self.support_lo, self.support_hi),
        }
    }

    /// The complex `Ker(aug)[n-1]`.
    ///
    /// With the unit a basis element, the kernel has basis
    /// `{e_i - aug(e_i)·1 : i != unit}` and `d` restricted to it has the
    /// same non-unit coordinates as `d` on the `e_i`.
    pub fn augmentation_kernel_shift(&self, n: u32) -> Result<Complex, Error> {
        if self.aug.is_none() {
            return Err(Error::NoAugmentation);
        }
        let idxs = self.ideal_basis();
        let mut by_deg: BTreeMap<Deg, Vec<usize>> = BTreeMap::new();
        for &i in &idxs {
            by_deg.entry(self.deg(i)).or_default().push(i);
        }
        let mut posmap: BTreeMap<usize, (Deg, usize)> = BTreeMap::new();
        for (d, list) in &by_deg {
            for (p, i) in list.iter().enumerate() {
                posmap.insert(*i, (*d, p));
            }
        }
        let space = GradedSpace::from_labels(by_deg.iter().map(|(d, list)| {
            (*d, list.iter().map(|i| self.label(*i).to_string()).collect())
        }));
        let mut b = MapBuilder::new(-1, &space, &space);
        for &i in &idxs {
            let (sd, sp) = posmap[&i];
            for (k, c) in self.d_elem(i) {
                if *k == self.unit {
                    return Err(Error::Invalid(
                        "augmentation is not a chain map: kernel not d-stable".into(),
                    ));
                }
                let (_, tp) = posmap[k];
                b.push(sd, sp, tp, c.clone());
            }
        }
        Ok(Complex::new(space, b.finish())?.shift(n as Deg - 1))
    }

    fn degree_ok(&self, d: Deg) -> bool {
        self.valid.is_none_or(|w| w.contains(d))
    }
}

/// Check every algebra axiom, reporting all violations with witnesses.
/// For truncated algebras, identities are only required where every term
/// stays inside the valid window.
pub fn validate_dga(a: &DgAlgebra) -> ValidationReport {
    let mut r = ValidationReport::default();
    let n = a.dim();
    let u = a.unit();
    if a.deg(u) != 0 {
        r.push("unit-degree", format!("unit {} has degree {}", a.label(u), a.deg(u)));
    }
    if !a.d_elem(u).is_empty() {
        r.push("unit-cycle", format!("d({}) != 0", a.label(u)));
    }
    for i in 0..n {
        if a.degree_ok(a.deg(i)) {
            if a.product(u, i) != [(i, Q::one())] {
                r.push("left-unit", format!("1·{} != {}", a.label(i), a.label(i)));
            }
            if a.product(i, u) != [(i, Q::one())] {
                r.push("right-unit", format!("{}·1 != {}", a.label(i), a.label(i)));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let dij = a.deg(i) + a.deg(j);
            if !a.degree_ok(dij) || !a.degree_ok(dij - 1) {
                continue;
            }
            // Leibniz
            let lhs = a.d_vec(a.product(i, j));
            let da_b = a.product_vec(a.d_elem(i), &[(j, Q::one())]);
            let a_db = a.product_vec(&[(i, Q::one())], a.d_elem(j));
            let rhs = collect_sparse(
                da_b.into_iter()
                    .chain(a_db.into_iter().map(|(k, c)| (k, c * signs::sign(a.deg(i))))),
            );
            if lhs != rhs {
                r.push("leibniz", format!("d({}·{})", a.label(i), a.label(j)));
            }
            if a.commutative {
                let ab = a.product(i, j).to_vec();
                let ba = collect_sparse(
                    a.product(j, i)
                        .iter()
                        .map(|(k, c)| (*k, c * signs::koszul(a.deg(i), a.deg(j)))),
                );
                if ab != ba {
                    r.push(
                        "commutativity",
                        format!("{}·{} != ±{}·{}", a.label(i), a.label(j), a.label(j), a.label(i)),
                    );
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let dt = a.deg(i) + a.deg(j) + a.deg(k);
                if !a.degree_ok(dt) || !a.degree_ok(a.deg(i) + a.deg(j)) || !a.degree_ok(a.deg(j) + a.deg(k)) {
                    continue;
                }
                let lhs = a.product_vec(a.product(i, j), &[(k, Q::one())]);
                let rhs = a.product_vec(&[(i, Q::one())], a.product(j, k));
                if lhs != rhs {
                    r.push(
                        "associativity",
                        format!("({},{},{})", a.label(i), a.label(j), a.label(k)),
                    );
                }
            }
        }
    }
    if let Some(aug) = a.augmentation() {
        if !aug[u].is_one() {
            r.push("augmentation-unit", "aug(1) != 1".into());
        }
        for i in 0..a.dim() {
            if a.deg(i) != 0 && !aug[i].is_zero() {
                r.push("augmentation-degree", format!("aug({}) != 0", a.label(i)));
            }
            let daug: Q = a
                .d_elem(i)
                .iter()
                .map(|(k, c)| &aug[*k] * c)
                .fold(Q::zero(), |s, v| s + v);
            if !daug.is_zero() {
                r.push("augmentation-chain-map", format!("aug(d {}) != 0", a.label(i)));
            }
            for j in 0..a.dim() {
                if !a.degree_ok(a.deg(i) + a.deg(j)) {
                    continue;
                }
                let lhs: Q = a
                    .product(i, j)
                    .iter()
                    .map(|(k, c)| &aug[*k] * c)
                    .fold(Q::zero(), |s, v| s + v);
                let rhs = &aug[i] * &aug[j];
                if lhs != rhs {
                    r.push(
                        "augmentation-multiplicative",
                        format!("aug({}·{})", a.label(i), a.label(j)),
                    );
                }
            }
        }
    }
    r
}

/// A dg Lie algebra with sparse bracket constants on a labeled basis.
#[derive(Clone, Debug)]
pub struct DgLieAlgebra {
    pub name: String,
    elements: Vec<(String, Deg)>,
    diff: Vec<SparseVec>,
    bracket: Structure,
    pub valid: Option<Window>,
    pub support_lo: Option<Deg>,
    pub support_hi: Option<Deg>,
}

impl DgLieAlgebra {
    pub fn from_parts(
        name: &str,
        elements: Vec<(String, Deg)>,
        diff: Vec<SparseVec>,
        bracket: Structure,
        valid: Option<Window>,
    ) -> Result<DgLieAlgebra, Error> {
        if diff.len() != elements.len() {
            return Err(Error::Invalid("differential table length mismatch".into()));
        }
        let degs: Vec<Deg> = elements.iter().map(|(_, d)| *d).collect();
        let (support_lo, support_hi) = if valid.is_none() {
            (degs.iter().min().copied(), degs.iter().max().copied())
        } else {
            (None, None)
        };
        let l = DgLieAlgebra {
            name: name.to_string(),
            elements,
            diff: diff.into_iter().map(collect_sparse).collect(),
            bracket: bracket
                .into_iter()
                .map(|(k, v)| (k, collect_sparse(v)))
                .filter(|(_, v)| !v.is_empty())
                .collect(),
            valid,
            support_lo,
            support_hi,
        };
        for ((i, j), v) in &l.bracket {
            let want = l.deg(*i) + l.deg(*j);
            for (k, _) in v {
                if l.deg(*k) != want {
                    return Err(Error::Invalid(format!(
                        "bracket [{},{}] is not homogeneous",
                        l.label(*i),
                        l.label(*j)
                    )));
                }
            }
        }
        Ok(l)
    }

    /// Abelian Lie algebra on a complex.
    pub fn abelian(name: &str, c: &Complex) -> DgLieAlgebra {
        let (elements, diff) = complex_to_elements(c);
        DgLieAlgebra {
            name: name.to_string(),
            elements,
            diff,
            bracket: BTreeMap::new(),
            valid: c.valid,
            support_lo: c.support_lo,
            support_hi: c.support_hi,
        }
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn deg(&self, i: usize) -> Deg {
        self.elements[i].1
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i].0
    }

    pub fn elements(&self) -> &[(String, Deg)] {
        &self.elements
    }

    pub fn d_elem(&self, i: usize) -> &[(usize, Q)] {
        &self.diff[i]
    }

    pub fn bracket_elems(&self, i: usize, j: usize) -> &[(usize, Q)] {
        static EMPTY: &[(usize, Q)] = &[];
        self.bracket.get(&(i, j)).map_or(EMPTY, |v| v.as_slice())
    }

    pub fn bracket_vec(&self, a: &[(usize, Q)], b: &[(usize, Q)]) -> SparseVec {
        collect_sparse(a.iter().flat_map(|(i, ci)| {
            b.iter().flat_map(move |(j, cj)| {
                self.bracket_elems(*i, *j).iter().map(move |(k, q)| (*k, q * ci * cj))
            })
        }))
    }

    pub fn d_vec(&self, v: &[(usize, Q)]) -> SparseVec {
        collect_sparse(v.iter().flat_map(|(i, c)| {
            self.diff[*i].iter().map(move |(k, q)| (*k, q * c))
        }))
    }

    pub fn complex(&self) -> Result<Complex, Error> {
        let mut by_deg: BTreeMap<Deg, Vec<usize>> = BTreeMap::new();
        for (i, (_, d)) in self.elements.iter().enumerate() {
            by_deg.entry(*d).or_default().push(i);
        }
        let pos: BTreeMap<usize, (Deg, usize)> = by_deg
            .iter()
            .flat_map(|(d, idxs)| idxs.iter().enumerate().map(move |(p, i)| (*i, (*d, p))))
            .collect();
        let space = GradedSpace::from_labels(
            by_deg
                .iter()
                .map(|(d, idxs)| (*d, idxs.iter().map(|i| self.label(*i).to_string()).collect())),
        );
        let mut b = MapBuilder::new(-1, &space, &space);
        for (i, dv) in self.diff.iter().enumerate() {
            let (sd, sp) = pos[&i];
            for (k, c) in dv {
                let (_, tp) = pos[k];
                b.push(sd, sp, tp, c.clone());
            }
        }
        match self.valid {
            None => Complex::new(space, b.finish()),
            Some(w) => Complex::new_truncated(space, b.finish(), w, self.support_lo, self.support_hi),
        }
    }

    fn degree_ok(&self, d: Deg) -> bool {
        self.valid.is_none_or(|w| w.contains(d))
    }
}

fn complex_to_elements(c: &Complex) -> (Vec<(String, Deg)>, Vec<SparseVec>) {
    let mut elements = Vec::new();
    let mut pos: BTreeMap<(Deg, usize), usize> = BTreeMap::new();
    for d in c.space.degrees() {
        for (i, l) in c.space.labels(d).iter().enumerate() {
            pos.insert((d, i), elements.len());
            elements.push((l.clone(), d));
        }
    }
    let mut diff = vec![Vec::new(); elements.len()];
    for d in c.space.degrees() {
        for i in 0..c.space.dim(d) {
            let img = c.d.apply(d, &vec![(i, Q::one())]);
            diff[pos[&(d, i)]] = img.into_iter().map(|(k, q)| (pos[&(d - 1, k)], q)).collect();
        }
    }
    (elements, diff)
}

/// Check graded antisymmetry, graded Jacobi, and the Leibniz rule.
pub fn validate_dgla(l: &DgLieAlgebra) -> ValidationReport {
    let mut r = ValidationReport::default();
    let n = l.dim();
    for i in 0..n {
        for j in 0..n {
            let dij = l.deg(i) + l.deg(j);
            if !l.degree_ok(dij) {
                continue;
            }
            let lhs = l.bracket_elems(i, j).to_vec();
            let rhs = collect_sparse(
                l.bracket_elems(j, i)
                    .iter()
                    .map(|(k, c)| (*k, -(c * signs::koszul(l.deg(i), l.deg(j))))),
            );
            if lhs != rhs {
                r.push(
                    "antisymmetry",
                    format!("[{},{}] != -(±)[{},{}]", l.label(i), l.label(j), l.label(j), l.label(i)),
                );
            }
            if l.degree_ok(dij - 1) {
                let lhs = l.d_vec(l.bracket_elems(i, j));
                let da_b = l.bracket_vec(l.d_elem(i), &[(j, Q::one())]);
                let a_db = l.bracket_vec(&[(i, Q::one())], l.d_elem(j));
                let rhs = collect_sparse(
                    da_b.into_iter()
                        .chain(a_db.into_iter().map(|(k, c)| (k, c * signs::sign(l.deg(i))))),
                );
                if lhs != rhs {
                    r.push("leibniz", format!("d[{},{}]", l.label(i), l.label(j)));
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let dt = l.deg(i) + l.deg(j) + l.deg(k);
                if !l.degree_ok(dt)
                    || !l.degree_ok(l.deg(j) + l.deg(k))
                    || !l.degree_ok(l.deg(i) + l.deg(j))
                    || !l.degree_ok(l.deg(i) + l.deg(k))
                {
                    continue;
                }
                // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
                let lhs = l.bracket_vec(&[(i, Q::one())], l.bracket_elems(j, k));
                let t1 = l.bracket_vec(l.bracket_elems(i, j), &[(k, Q::one())]);
                let t2 = l.bracket_vec(&[(j, Q::one())], l.bracket_elems(i, k));
                let s = signs::koszul(l.deg(i), l.deg(j));
                let rhs = collect_sparse(
                    t1.into_iter().chain(t2.into_iter().map(|(m, c)| (m, c * &s))),
                );
                if lhs != rhs {
                    r.push(
                        "jacobi",
                        format!("({},{},{})", l.label(i), l.label(j), l.label(k)),
                    );
                }
            }
        }
    }
    r
}

/// Trivial square-zero extension `k ⊕ M`.
#[derive(Clone, Debug)]
pub struct SquareZeroExtension {
    pub module: Complex,
    pub algebra: DgAlgebra,
}

/// The augmented commutative algebra `k ⊕ M` with zero products on `M`.
pub fn square_zero(name: &str, m: &Complex) -> Result<SquareZeroExtension, Error> {
    if let Some(lo) = m.space.min_degree() {
        if lo < 0 {
            return Err(Error::NotConnective { degree: lo });
        }
    }
    let (m_elements, m_diff) = complex_to_elements(m);
    let mut elements = vec![("1".to_string(), 0)];
    let mut diff: Vec<SparseVec> = vec![Vec::new()];
    for (lbl, d) in &m_elements {
        elements.push((lbl.clone(), *d));
    }
    for dv in &m_diff {
        diff.push(dv.iter().map(|(k, c)| (k + 1, c.clone())).collect());
    }
    let mut mult: Structure = BTreeMap::new();
    let n = elements.len();
    for i in 0..n {
        mult.insert((0, i), vec![(i, Q::one())]);
        if i != 0 {
            mult.insert((i, 0), vec![(i, Q::one())]);
        }
    }
    let mut aug = vec![Q::zero(); n];
    aug[0] = Q::one();
    let algebra = DgAlgebra::from_parts(name, elements, 0, diff, mult, true, Some(aug), None)?;
    Ok(SquareZeroExtension { module: m.clone(), algebra })
}

/// `k[x]/(x^p)` with `x` in degree 0, augmented by `x -> 0`.
pub fn truncated_polynomial(p: u32) -> Result<DgAlgebra, Error> {
    if p < 2 {
        return Err(Error::BadParameter(format!("need p >= 2, got {p}")));
    }
    let p = p as usize;
    let elements: Vec<(String, Deg)> = (0..p)
        .map(|i| {
            let l = match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            (l, 0)
        })
        .collect();
    let mut mult: Structure = BTreeMap::new();
    for i in 0..p {
        for j in 0..p {
            if i + j < p {
                mult.insert((i, j), vec![(i + j, Q::one())]);
            }
        }
    }
    let mut aug = vec![Q::zero(); p];
    aug[0] = Q::one();
    DgAlgebra::from_parts(
        &format!("k[x]/x^{p}"),
        elements,
        0,
        vec![Vec::new(); p],
        mult,
        true,
        Some(aug),
        None,
    )
}

/// The ground field as an algebra.
pub fn ground_field() -> DgAlgebra {
    DgAlgebra::from_parts(
        "k",
        vec![("1".to_string(), 0)],
        0,
        vec![Vec::new()],
        BTreeMap::from([((0, 0), vec![(0, Q::one())])]),
        true,
        Some(vec![Q::one()]),
        None,
    )
    .expect("ground field is valid")
}

/// Tensor product of algebras with the Koszul-signed multiplication.
pub fn tensor_dga(a: &DgAlgebra, b: &DgAlgebra) -> Result<DgAlgebra, Error> {
    let an = a.dim();
    let bn = b.dim();
    let idx = |i: usize, j: usize| i * bn + j;
    let mut elements = Vec::with_capacity(an * bn);
    for i in 0..an {
        for j in 0..bn {
            let label = match (i == a.unit(), j == b.unit()) {
                (true, true) => "1".to_string(),
                (true, false) => b.label(j).to_string(),
                (false, true) => a.label(i).to_string(),
                (false, false) => format!("{}⊗{}", a.label(i), b.label(j)),
            };
            elements.push((label, a.deg(i) + b.deg(j)));
        }
    }
    let mut diff = vec![Vec::new(); an * bn];
    for i in 0..an {
        for j in 0..bn {
            let mut v: SparseVec = a
                .d_elem(i)
                .iter()
                .map(|(k, c)| (idx(*k, j), c.clone()))
                .collect();
            let s = signs::sign(a.deg(i));
            v.extend(b.d_elem(j).iter().map(|(k, c)| (idx(i, *k), c * &s)));
            diff[idx(i, j)] = collect_sparse(v);
        }
    }
    let mut mult: Structure = BTreeMap::new();
    for i1 in 0..an {
        for j1 in 0..bn {
            for i2 in 0..an {
                for j2 in 0..bn {
                    let s = signs::koszul(b.deg(j1), a.deg(i2));
                    let terms: SparseVec = collect_sparse(a.product(i1, i2).iter().flat_map(
                        |(k1, c1)| {
                            let s = s.clone();
                            b.product(j1, j2)
                                .iter()
                                .map(move |(k2, c2)| (idx(*k1, *k2), c1 * c2 * &s))
                        },
                    ));
                    if !terms.is_empty() {
                        mult.insert((idx(i1, j1), idx(i2, j2)), terms);
                    }
                }
            }
        }
    }
    let aug = match (a.augmentation(), b.augmentation()) {
        (Some(aa), Some(ba)) => {
            let mut v = vec![Q::zero(); an * bn];
            for i in 0..an {
                for j in 0..bn {
                    v[idx(i, j)] = &aa[i] * &ba[j];
                }
            }
            Some(v)
        }
        _ => None,
    };
    let valid = match (a.valid, b.valid) {
        (None, None) => None,
        (av, bv) => av.unwrap_or(Window::new(Deg::MIN / 4, Deg::MAX / 4)).intersect(
            bv.unwrap_or(Window::new(Deg::MIN / 4, Deg::MAX / 4)),
        ),
    };
    DgAlgebra::from_parts(
        &format!("{}⊗{}", a.name, b.name),
        elements,
        idx(a.unit(), b.unit()),
        diff,
        mult,
        a.commutative && b.commutative,
        aug,
        valid,
    )
}

/// `n x n` matrices over `a`, with basis `{1} ∪ {e_pq : (p,q) != (0,0)}`
/// tensored with the basis of `a` (so the unit stays a basis element;
/// `e_00 = 1 - e_11 - ... `).
pub fn matrix_algebra(n: usize, a: &DgAlgebra) -> Result<DgAlgebra, Error> {
    assert!(n >= 1);
    // matrix units as vectors over the chosen basis of M_n(k)
    // basis order: slot 0 = identity, then all (p,q) != (0,0) in lex order
    let mut slots = vec![(usize::MAX, usize::MAX)];
    for p in 0..n {
        for q in 0..n {
            if (p, q) != (0, 0) {
                slots.push((p, q));
            }
        }
    }
    let slot_of = |p: usize, q: usize| -> Vec<(usize, Q)> {
        if (p, q) == (0, 0) {
            // e_00 = 1 - sum_{p>=1} e_pp
            let mut v = vec![(0, Q::one())];
            for r in 1..n {
                let pos = slots.iter().position(|s| *s == (r, r)).unwrap();
                v.push((pos, -Q::one()));
            }
            v
        } else {
            vec![(slots.iter().position(|s| *s == (p, q)).unwrap(), Q::one())]
        }
    };
    let m = slots.len();
    // product of basis slots, in terms of slots
    let slot_mul = |x: usize, y: usize| -> Vec<(usize, Q)> {
        let expand = |s: usize| -> Vec<((usize, usize), Q)> {
            if s == 0 {
                (0..n).map(|p| ((p, p), Q::one())).collect()
            } else {
                vec![(slots[s], Q::one())]
            }
        };
        let mut out: BTreeMap<usize, Q> = BTreeMap::new();
        for ((p, q), c1) in expand(x) {
            for ((r, s2), c2) in expand(y) {
                if q == r {
                    for (k, c3) in slot_of(p, s2) {
                        let e = out.entry(k).or_insert_with(Q::zero);
                        *e += &c1 * &c2 * c3;
                        if e.is_zero() {
                            out.remove(&k);
                        }
                    }
                }
            }
        }
        out.into_iter().collect()
    };
    let an = a.dim();
    let idx = |s: usize, i: usize| s * an + i;
    let mut elements = Vec::new();
    for s in 0..m {
        for i in 0..an {
            let sl = if s == 0 {
                "I".to_string()
            } else {
                format!("e{}{}", slots[s].0, slots[s].1)
            };
            let label = match (s == 0, i == a.unit()) {
                (true, true) => "1".to_string(),
                (true, false) => a.label(i).to_string(),
                (false, true) => sl,
                (false, false) => format!("{}·{}", sl, a.label(i)),
            };
            elements.push((label, a.deg(i)));
        }
    }
    let mut diff = vec![Vec::new(); m * an];
    for s in 0..m {
        for i in 0..an {
            diff[idx(s, i)] = a
                .d_elem(i)
                .iter()
                .map(|(k, c)| (idx(s, *k), c.clone()))
                .collect();
        }
    }
    let mut mult: Structure = BTreeMap::new();
    for s1 in 0..m {
        for i1 in 0..an {
            for s2 in 0..m {
                for i2 in 0..an {
                    let terms: SparseVec = collect_sparse(slot_mul(s1, s2).into_iter().flat_map(
                        |(s3, c)| {
                            a.product(i1, i2)
                                .iter()
                                .map(|(k, c2)| (idx(s3, *k), &c * c2))
                                .collect::<Vec<_>>()
                        },
                    ));
                    if !terms.is_empty() {
                        mult.insert((idx(s1, i1), idx(s2, i2)), terms);
                    }
                }
            }
        }
    }
    DgAlgebra::from_parts(
        &format!("M{}({})", n, a.name),
        elements,
        idx(0, a.unit()),
        diff,
        mult,
        false,
        None,
        a.valid,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qi;

    #[test]
    fn ground_field_and_dual_numbers_validate() {
        assert!(validate_dga(&ground_field()).is_valid());
        let eps = square_zero("k[ε]", &Complex::line(0, "ε")).unwrap();
        assert!(validate_dga(&eps.algebra).is_valid());
        assert_eq!(eps.algebra.dim(), 2);
        for p in 2..=6 {
            assert!(validate_dga(&truncated_polynomial(p).unwrap()).is_valid());
        }
        assert!(truncated_polynomial(1).is_err());
    }

    #[test]
    fn corrupted_associativity_is_reported() {
        let mut bad = truncated_polynomial(4).unwrap();
        // kill x·x² but keep x²·x: (x·x)·x != x·(x·x)
        bad.mult.remove(&(1, 2));
        let r = validate_dga(&bad);
        assert!(!r.is_valid());
        assert!(r
            .violations
            .iter()
            .any(|v| v.axiom == "associativity" && v.witness.contains("(x,x,x)")));
    }

    #[test]
    fn square_zero_on_graded_module() {
        let m = Complex::with_zero_diff(GradedSpace::from_labels([
            (0, vec!["u".into()]),
            (1, vec!["v".into()]),
        ]));
        let e = square_zero("k⊕M", &m).unwrap();
        assert!(validate_dga(&e.algebra).is_valid());
        assert_eq!(e.algebra.dim(), 3);
        // kernel of the augmentation is M again
        let ker = e.algebra.augmentation_kernel_shift(1).unwrap();
        assert_eq!(ker.space.dims(), m.space.dims());
        // and shifting: n = 2 moves degrees up by one
        let ker2 = e.algebra.augmentation_kernel_shift(2).unwrap();
        assert_eq!(ker2.space.dim(1), 1);
        assert_eq!(ker2.space.dim(2), 1);
        // negative-degree module is rejected
        assert!(matches!(
            square_zero("bad", &Complex::line(-1, "w")),
            Err(Error::NotConnective { degree: -1 })
        ));
    }

    #[test]
    fn ground_field_kernel_is_zero() {
        let k = ground_field();
        let ker = k.augmentation_kernel_shift(1).unwrap();
        assert_eq!(ker.space.total_dim(), 0);
    }

    #[test]
    fn tensor_of_algebras() {
        let eps = square_zero("k[ε]", &Complex::line(0, "ε")).unwrap().algebra;
        let t = tensor_dga(&eps, &eps).unwrap();
        assert!(validate_dga(&t).is_valid());
        assert_eq!(t.dim(), 4);
        assert!(t.commutative);
        let k = ground_field();
        let kt = tensor_dga(&k, &eps).unwrap();
        assert_eq!(kt.dim(), 2);
        assert!(validate_dga(&kt).is_valid());
        // graded case: signs exercised by a degree-1 generator
        let m = Complex::line(1, "s");
        let e1 = square_zero("k⊕k[1]", &m).unwrap().algebra;
        let tt = tensor_dga(&e1, &e1).unwrap();
        assert!(validate_dga(&tt).is_valid());
        assert!(validate_dga(&tensor_dga(&e1, &eps).unwrap()).is_valid());
    }

    #[test]
    fn matrix_algebra_is_associative() {
        let eps = square_zero("k[ε]", &Complex::line(0, "ε")).unwrap().algebra;
        let m2 = matrix_algebra(2, &eps).unwrap();
        assert_eq!(m2.dim(), 8);
        assert!(validate_dga(&m2).is_valid());
        assert!(!m2.commutative);
    }

    #[test]
    fn sl2_is_a_lie_algebra() {
        // e, f, h in degree 0: [h,e]=2e, [h,f]=-2f, [e,f]=h
        let elements = vec![
            ("e".to_string(), 0),
            ("f".to_string(), 0),
            ("h".to_string(), 0),
        ];
        let mut br: Structure = BTreeMap::new();
        br.insert((2, 0), vec![(0, qi(2))]);
        br.insert((0, 2), vec![(0, qi(-2))]);
        br.insert((2, 1), vec![(1, qi(-2))]);
        br.insert((1, 2), vec![(1, qi(2))]);
        br.insert((0, 1), vec![(2, qi(1))]);
        br.insert((1, 0), vec![(2, qi(-1))]);
        let sl2 =
            DgLieAlgebra::from_parts("sl2", elements, vec![Vec::new(); 3], br, None).unwrap();
        assert!(validate_dgla(&sl2).is_valid());

        // injected Jacobi fault is detected
        let mut bad = sl2.clone();
        bad.bracket.insert((0, 1), vec![(0, qi(1))]);
        bad.bracket.insert((1, 0), vec![(0, qi(-1))]);
        let r = validate_dgla(&bad);
        assert!(r.violations.iter().any(|v| v.axiom == "jacobi"));
    }

    #[test]
    fn abelian_lie_validates() {
        let l = DgLieAlgebra::abelian("ab", &Complex::line(-2, "x"));
        assert!(validate_dgla(&l).is_valid());
    }
}
