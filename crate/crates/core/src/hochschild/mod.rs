//! Normalized Hochschild chains of a dg algebra, with the Connes operator,
//! the shuffle product for commutative inputs, and the unnormalized
//! complex as a cross-check target.
//!
//! A chain word is `a0[l1|...|ln]`: a module-slot element of the full
//! algebra and letters from the unit complement. Letters count with their
//! shifted degree `η = |l| + 1`; the word degree is `|a0| + Σ η_i`.
//! The differential and the Connes operator follow signs.md:
//!
//! ```text
//! b(a0[l1|..|ln]) = d(a0)[l1|..|ln]
//!     - Σ_i (-1)^{D_{i-1}} a0[..|d(l_i)|..]
//!     + (-1)^{|a0|} (a0·l1)[l2|..]
//!     + Σ_{i<n} (-1)^{D_i} a0[..|π(l_i·l_{i+1})|..]
//!     - (-1)^{η_n·D_{n-1}} (l_n·a0)[l1|..|l_{n-1}]
//!
//! B(a0[l1|..|ln]) = Σ_i (-1)^{(η_0'+..+η_{i-1})·(η_i+..+η_n)}
//!                        1[l_i|..|l_n|a0|l_1|..|l_{i-1}]
//! ```
//! with `D_i = |a0| + η_1 + .. + η_i`, `π` the projection along the unit,
//! and `η_0' = |a0| + 1` (the module slot becomes a letter under `B`).

pub mod calculus;
pub mod cochains;

use crate::complex::{Complex, MixedComplex};
use crate::dg::DgAlgebra;
use crate::error::Error;
use crate::gmap::{GradedMap, MapBuilder};
use crate::graded::{Deg, DimTable, GradedSpace, Window};
use crate::linalg::{collect_sparse, Q, SparseVec};
use crate::signs::{sign_i, shifted};
use num::One;
use std::collections::{BTreeMap, HashMap};

pub use crate::complex::{cyclic_variants, CyclicTables};

/// A normalized chain word: module slot plus letters (non-unit indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub a0: usize,
    pub letters: Vec<usize>,
}

impl Word {
    fn label(&self, a: &DgAlgebra) -> String {
        if self.letters.is_empty() {
            format!("{}[]", a.label(self.a0))
        } else {
            let ls: Vec<&str> = self.letters.iter().map(|l| a.label(*l)).collect();
            format!("{}[{}]", a.label(self.a0), ls.join("|"))
        }
    }

    pub fn degree(&self, a: &DgAlgebra) -> Deg {
        a.deg(self.a0) + self.letters.iter().map(|l| shifted(a.deg(*l))).sum::<Deg>()
    }
}

/// Whether the chain construction runs upward from connective data or
/// downward from coconnective data.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Orientation {
    Connective,
    Coconnective,
}

/// Normalized Hochschild chains materialized on a certified window.
pub struct HochschildChains {
    pub algebra: DgAlgebra,
    pub mixed: MixedComplex,
    pub word_bound: usize,
    /// Window on which homology is certified exact.
    pub valid: Window,
    words: BTreeMap<Deg, Vec<Word>>,
    index: HashMap<Word, (Deg, usize)>,
}

impl HochschildChains {
    pub fn words_at(&self, n: Deg) -> &[Word] {
        self.words.get(&n).map_or(&[], |w| w.as_slice())
    }

    pub fn lookup(&self, w: &Word) -> Option<(Deg, usize)> {
        self.index.get(w).copied()
    }

    pub fn degrees(&self) -> impl Iterator<Item = Deg> + '_ {
        self.words.keys().copied()
    }

    /// Turn a word-level operator into a `GradedMap` on the materialized
    /// complex. `op` returns formal `(Word, Q)` terms; terms leaving the
    /// materialized range are dropped when `clip` is set, and an error
    /// would be a bug otherwise.
    pub fn operator(
        &self,
        degree: Deg,
        clip: bool,
        op: impl Fn(&Word) -> Vec<(Word, Q)>,
    ) -> GradedMap {
        let space = &self.mixed.complex.space;
        let mut b = MapBuilder::new(degree, space, space);
        for (n, ws) in &self.words {
            for (col, w) in ws.iter().enumerate() {
                for (tw, c) in op(w) {
                    match self.index.get(&tw) {
                        Some((td, row)) => {
                            debug_assert_eq!(*td, n + degree);
                            b.push(*n, col, *row, c);
                        }
                        None => {
                            if !clip {
                                panic!("operator left the materialized range: {tw:?}");
                            }
                        }
                    }
                }
            }
        }
        b.finish()
    }
}

/// The signed terms of `b` applied to one word. Exposed for reuse by the
/// relative/deformed chain builders, which substitute their own product.
pub(crate) fn boundary_terms(
    a: &DgAlgebra,
    w: &Word,
    mut product: impl FnMut(usize, usize) -> SparseVec,
) -> Vec<(Word, Q)> {
    let mut out: Vec<(Word, Q)> = Vec::new();
    let n = w.letters.len();
    let a0deg = a.deg(w.a0);
    // prefix parities D_{i} = |a0| + η_1 + ... + η_i
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(a0deg);
    for l in &w.letters {
        prefix.push(prefix.last().unwrap() + shifted(a.deg(*l)));
    }
    // d on the module slot
    for (k, c) in a.d_elem(w.a0) {
        out.push((Word { a0: *k, letters: w.letters.clone() }, c.clone()));
    }
    // d on the letters
    for i in 0..n {
        let s = sign_i(prefix[i]);
        for (k, c) in a.d_elem(w.letters[i]) {
            if *k == a.unit() {
                continue;
            }
            let mut letters = w.letters.clone();
            letters[i] = *k;
            out.push((Word { a0: w.a0, letters }, c * Q::from_integer((-s).into())));
        }
    }
    if n == 0 {
        return out;
    }
    // left merge
    for (k, c) in product(w.a0, w.letters[0]) {
        out.push((
            Word { a0: k, letters: w.letters[1..].to_vec() },
            c * Q::from_integer(sign_i(a0deg).into()),
        ));
    }
    // middle merges
    for i in 0..n.saturating_sub(1) {
        let s = sign_i(prefix[i + 1]);
        for (k, c) in product(w.letters[i], w.letters[i + 1]) {
            if k == a.unit() {
                continue;
            }
            let mut letters = Vec::with_capacity(n - 1);
            letters.extend_from_slice(&w.letters[..i]);
            letters.push(k);
            letters.extend_from_slice(&w.letters[i + 2..]);
            out.push((Word { a0: w.a0, letters }, c * Q::from_integer(s.into())));
        }
    }
    // cyclic merge
    let eta_n = shifted(a.deg(w.letters[n - 1]));
    let s = sign_i(eta_n * prefix[n - 1]);
    for (k, c) in product(w.letters[n - 1], w.a0) {
        out.push((
            Word { a0: k, letters: w.letters[..n - 1].to_vec() },
            c * Q::from_integer((-s).into()),
        ));
    }
    out
}

/// The signed terms of the Connes operator applied to one word.
pub(crate) fn connes_terms(a: &DgAlgebra, w: &Word) -> Vec<(Word, Q)> {
    if w.a0 == a.unit() {
        // every rotation puts the old unit into a letter slot
        return Vec::new();
    }
    let n = w.letters.len();
    let eta0 = shifted(a.deg(w.a0));
    let etas: Vec<Deg> = w.letters.iter().map(|l| shifted(a.deg(*l))).collect();
    let total_tail: Deg = etas.iter().sum();
    let mut out = Vec::with_capacity(n + 1);
    // rotation i starts the letter block at position i; the block
    // (a0, l_1..l_i) of parity `head` crosses the block (l_{i+1}..l_n)
    // of parity `tail`
    let mut head = eta0;
    let mut tail = total_tail;
    for i in 0..=n {
        let mut letters = Vec::with_capacity(n + 1);
        letters.extend_from_slice(&w.letters[i..]);
        letters.push(w.a0);
        letters.extend_from_slice(&w.letters[..i]);
        let s = sign_i(head * tail);
        out.push((Word { a0: a.unit(), letters }, Q::from_integer(s.into())));
        if i < n {
            head += etas[i];
            tail -= etas[i];
        }
    }
    out
}

fn orientation(a: &DgAlgebra) -> Result<Orientation, Error> {
    let letters = a.ideal_basis();
    if letters.is_empty() {
        return Ok(Orientation::Connective);
    }
    let degs: Vec<Deg> = letters.iter().map(|l| a.deg(*l)).collect();
    let amin = (0..a.dim()).map(|i| a.deg(i)).min().unwrap();
    let amax = (0..a.dim()).map(|i| a.deg(i)).max().unwrap();
    if degs.iter().all(|d| *d >= 0) && amin >= 0 {
        Ok(Orientation::Connective)
    } else if degs.iter().all(|d| *d <= -2) && amax <= 0 {
        Ok(Orientation::Coconnective)
    } else {
        Err(Error::TruncationInsufficient(
            "cannot certify a word bound: the augmentation ideal has a generator of degree -1 \
             or spans both signs"
                .into(),
        ))
    }
}

fn enumerate_words(a: &DgAlgebra, mat: Window, orient: Orientation) -> BTreeMap<Deg, Vec<Word>> {
    let letters = a.ideal_basis();
    let keep = |d: Deg| mat.contains(d);
    let can_extend = |d: Deg| match orient {
        Orientation::Connective => d <= mat.hi,
        Orientation::Coconnective => d >= mat.lo,
    };
    let mut out: BTreeMap<Deg, Vec<Word>> = BTreeMap::new();
    let mut frontier: Vec<Word> = Vec::new();
    for a0 in 0..a.dim() {
        let w = Word { a0, letters: Vec::new() };
        let d = w.degree(a);
        if can_extend(d) {
            frontier.push(w);
        }
    }
    while let Some(w) = frontier.pop() {
        let d = w.degree(a);
        if keep(d) {
            out.entry(d).or_default().push(w.clone());
        }
        for &l in &letters {
            let nd = d + shifted(a.deg(l));
            if can_extend(nd) {
                let mut letters2 = w.letters.clone();
                letters2.push(l);
                frontier.push(Word { a0: w.a0, letters: letters2 });
            }
        }
    }
    for ws in out.values_mut() {
        ws.sort_by(|x, y| (x.letters.len(), x.a0, &x.letters).cmp(&(y.letters.len(), y.a0, &y.letters)));
    }
    out
}

/// Build the normalized chains with `b` and Connes `B`, materialized and
/// certified on `w` (internally padded by one degree on each side).
pub fn hochschild_chains(a: &DgAlgebra, w: Window) -> Result<HochschildChains, Error> {
    let orient = orientation(a)?;
    let mat = Window::new(w.lo - 1, w.hi + 1);
    // the input algebra must be exact on every degree a letter or module
    // slot can take
    if let Some(v) = a.valid {
        let needed = match orient {
            Orientation::Connective => Window::new(0, mat.hi),
            Orientation::Coconnective => Window::new(mat.lo - 1, 0),
        };
        if !v.contains_window(needed) {
            return Err(Error::WindowUnderflow { degree: needed.lo, valid: v });
        }
    }
    let words = enumerate_words(a, mat, orient);
    let word_bound = words
        .values()
        .flat_map(|ws| ws.iter().map(|w| w.letters.len()))
        .max()
        .unwrap_or(0);
    let mut index: HashMap<Word, (Deg, usize)> = HashMap::new();
    let mut labels: BTreeMap<Deg, Vec<String>> = BTreeMap::new();
    for (d, ws) in &words {
        let mut at = Vec::with_capacity(ws.len());
        for (i, wd) in ws.iter().enumerate() {
            index.insert(wd.clone(), (*d, i));
            at.push(wd.label(a));
        }
        labels.insert(*d, at);
    }
    let space = GradedSpace::from_labels(labels);

    let mut bb = MapBuilder::new(-1, &space, &space);
    for (n, ws) in &words {
        for (col, wd) in ws.iter().enumerate() {
            let terms = boundary_terms(a, wd, |i, j| a.product(i, j).to_vec());
            for (tw, c) in collect_words(terms) {
                if let Some((td, row)) = index.get(&tw) {
                    debug_assert_eq!(*td, n - 1);
                    bb.push(*n, col, *row, c);
                } else {
                    debug_assert!(!mat.contains(n - 1), "b left the window interior");
                }
            }
        }
    }
    let no_letters = a.ideal_basis().is_empty();
    let (support_lo, support_hi, stored_valid) = match orient {
        Orientation::Connective => {
            let lo = (0..a.dim()).map(|i| a.deg(i)).min();
            let hi = if no_letters { (0..a.dim()).map(|i| a.deg(i)).max() } else { None };
            // below the true support the data (nothing) is exact too
            (lo, hi, Window::new(Deg::MIN / 4, mat.hi))
        }
        Orientation::Coconnective => {
            let hi = (0..a.dim()).map(|i| a.deg(i)).max();
            (None, hi, Window::new(mat.lo, Deg::MAX / 4))
        }
    };
    let complex = Complex::new_truncated(space.clone(), bb.finish(), stored_valid, support_lo, support_hi)?;

    let b_valid = match orient {
        Orientation::Connective => Window::new(Deg::MIN / 4, mat.hi - 1),
        Orientation::Coconnective => Window::new(mat.lo, Deg::MAX / 4),
    };
    let mut cb = MapBuilder::new(1, &space, &space);
    for (n, ws) in &words {
        if *n + 1 > mat.hi {
            continue;
        }
        for (col, wd) in ws.iter().enumerate() {
            for (tw, c) in collect_words(connes_terms(a, wd)) {
                if tw.letters.contains(&a.unit()) {
                    continue;
                }
                if let Some((td, row)) = index.get(&tw) {
                    debug_assert_eq!(*td, n + 1);
                    cb.push(*n, col, *row, c);
                }
            }
        }
    }
    let mixed = MixedComplex::new(complex, cb.finish(), b_valid)?;
    Ok(HochschildChains { algebra: a.clone(), mixed, word_bound, valid: w, words, index })
}

/// Collect formal word terms, summing duplicates.
pub(crate) fn collect_words(terms: Vec<(Word, Q)>) -> Vec<(Word, Q)> {
    let mut acc: BTreeMap<Word, Q> = BTreeMap::new();
    for (w, c) in terms {
        use num::Zero;
        if c.is_zero() {
            continue;
        }
        let e = acc.entry(w).or_insert_with(Q::zero);
        *e += c;
    }
    acc.into_iter().filter(|(_, c)| !num::Zero::is_zero(c)).collect()
}

/// Homology dimensions of the normalized chains on `w`.
pub fn hh_dims(a: &DgAlgebra, w: Window) -> Result<DimTable, Error> {
    hochschild_chains(a, w)?.mixed.complex.homology_dims(w)
}

/// Shuffle two letter sequences with Koszul signs in shifted degrees.
fn shuffles(a: &DgAlgebra, u: &[usize], v: &[usize]) -> Vec<(Vec<usize>, i64)> {
    if u.is_empty() {
        return vec![(v.to_vec(), 1)];
    }
    if v.is_empty() {
        return vec![(u.to_vec(), 1)];
    }
    let mut out = Vec::new();
    // first letter from u
    for (mut w, s) in shuffles(a, &u[1..], v) {
        let mut word = vec![u[0]];
        word.append(&mut w);
        out.push((word, s));
    }
    // first letter from v: v0 crosses all of u
    let hu: Deg = u.iter().map(|l| shifted(a.deg(*l))).sum();
    let sv = sign_i(shifted(a.deg(v[0])) * hu);
    for (mut w, s) in shuffles(a, u, &v[1..]) {
        let mut word = vec![v[0]];
        word.append(&mut w);
        out.push((word, s * sv));
    }
    out
}

/// The shuffle product of two chain words over a commutative algebra.
pub(crate) fn shuffle_product(a: &DgAlgebra, x: &Word, y: &Word) -> Vec<(Word, Q)> {
    let hx: Deg = x.letters.iter().map(|l| shifted(a.deg(*l))).sum();
    let s0 = sign_i(a.deg(y.a0) * hx);
    let mut out = Vec::new();
    for (k, c) in a.product(x.a0, y.a0) {
        for (letters, s) in shuffles(a, &x.letters, &y.letters) {
            out.push((
                Word { a0: *k, letters },
                c * Q::from_integer((s0 * s).into()),
            ));
        }
    }
    collect_words(out)
}

/// Hochschild chains of a commutative algebra with their shuffle product:
/// the strict model of the circle tensor `R ⊗ S¹`. The returned algebra's
/// basis order matches the chain complex's per-degree word order, so the
/// Connes operator of `chains` acts on the same indexing.
pub struct CircleAlgebra {
    pub algebra: DgAlgebra,
    pub chains: HochschildChains,
}

pub fn circle_tensor_commutative(r: &DgAlgebra, w: Window) -> Result<CircleAlgebra, Error> {
    if !r.commutative {
        return Err(Error::NotCommutative);
    }
    let chains = hochschild_chains(r, w)?;
    let mut elements = Vec::new();
    let mut pos: HashMap<Word, usize> = HashMap::new();
    for (d, ws) in &chains.words {
        for word in ws {
            pos.insert(word.clone(), elements.len());
            elements.push((word.label(r), *d));
        }
    }
    let unit_word = Word { a0: r.unit(), letters: Vec::new() };
    let unit = pos[&unit_word];
    let mut diff = vec![Vec::new(); elements.len()];
    for (_, ws) in &chains.words {
        for word in ws {
            let terms = boundary_terms(r, word, |i, j| r.product(i, j).to_vec());
            diff[pos[word]] = collect_words(terms)
                .into_iter()
                .filter_map(|(tw, c)| pos.get(&tw).map(|p| (*p, c)))
                .collect();
        }
    }
    let mut mult: crate::dg::Structure = BTreeMap::new();
    let mat = Window::new(w.lo - 1, w.hi + 1);
    for (di, ws1) in &chains.words {
        for x in ws1 {
            for (dj, ws2) in &chains.words {
                if !mat.contains(di + dj) {
                    continue;
                }
                for y in ws2 {
                    let terms: SparseVec = shuffle_product(r, x, y)
                        .into_iter()
                        .filter_map(|(tw, c)| pos.get(&tw).map(|p| (*p, c)))
                        .collect();
                    if !terms.is_empty() {
                        mult.insert((pos[x], pos[y]), collect_sparse(terms));
                    }
                }
            }
        }
    }
    // augmentation to k: the image of a word under C(R) -> C(k)
    let aug = elements
        .iter()
        .enumerate()
        .map(|(i, _)| i)
        .map(|i| {
            let word = chains
                .words
                .values()
                .flatten()
                .find(|w2| pos[*w2] == i)
                .expect("indexed word");
            if word.letters.is_empty() {
                r.aug_of(word.a0)
            } else {
                Q::from_integer(0.into())
            }
        })
        .collect::<Vec<Q>>();
    let aug = r.augmentation().map(|_| aug);
    let mut algebra = DgAlgebra::from_parts(
        &format!("{}⊗S¹", r.name),
        elements,
        unit,
        diff,
        mult,
        true,
        aug,
        Some(mat),
    )?;
    algebra.support_lo = Some(0);
    algebra.support_hi = None;
    Ok(CircleAlgebra { algebra, chains })
}

/// Unnormalized Hochschild chains (letters from the full algebra, no
/// normalization projections); only used as a quasi-isomorphism cross-check.
pub fn hochschild_chains_full(a: &DgAlgebra, w: Window) -> Result<Complex, Error> {
    let orient = orientation(a)?;
    if orient != Orientation::Connective {
        return Err(Error::TruncationInsufficient(
            "unnormalized chains are only materialized for connective algebras".into(),
        ));
    }
    let mat = Window::new(w.lo - 1, w.hi + 1);
    // every basis element is a letter here
    let mut words: BTreeMap<Deg, Vec<Word>> = BTreeMap::new();
    let mut frontier: Vec<Word> = (0..a.dim()).map(|a0| Word { a0, letters: Vec::new() }).collect();
    while let Some(wd) = frontier.pop() {
        let d = wd.degree(a);
        if d > mat.hi {
            continue;
        }
        if mat.contains(d) {
            words.entry(d).or_default().push(wd.clone());
        }
        for l in 0..a.dim() {
            if d + shifted(a.deg(l)) <= mat.hi {
                let mut letters = wd.letters.clone();
                letters.push(l);
                frontier.push(Word { a0: wd.a0, letters });
            }
        }
    }
    for ws in words.values_mut() {
        ws.sort_by(|x, y| (x.letters.len(), x.a0, &x.letters).cmp(&(y.letters.len(), y.a0, &y.letters)));
    }
    let mut index: HashMap<Word, (Deg, usize)> = HashMap::new();
    let mut labels: BTreeMap<Deg, Vec<String>> = BTreeMap::new();
    for (d, ws) in &words {
        let mut at = Vec::with_capacity(ws.len());
        for (i, wd) in ws.iter().enumerate() {
            index.insert(wd.clone(), (*d, i));
            at.push(wd.label(a));
        }
        labels.insert(*d, at);
    }
    let space = GradedSpace::from_labels(labels);
    let mut bb = MapBuilder::new(-1, &space, &space);
    for (n, ws) in &words {
        for (col, wd) in ws.iter().enumerate() {
            // identical face structure, but no unit projection anywhere
            let terms = full_boundary_terms(a, wd);
            for (tw, c) in collect_words(terms) {
                if let Some((_, row)) = index.get(&tw) {
                    bb.push(*n, col, *row, c);
                }
            }
        }
    }
    Complex::new_truncated(space, bb.finish(), mat, (0..a.dim()).map(|i| a.deg(i)).min(), None)
}

fn full_boundary_terms(a: &DgAlgebra, w: &Word) -> Vec<(Word, Q)> {
    let mut out: Vec<(Word, Q)> = Vec::new();
    let n = w.letters.len();
    let a0deg = a.deg(w.a0);
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(a0deg);
    for l in &w.letters {
        prefix.push(prefix.last().unwrap() + shifted(a.deg(*l)));
    }
    for (k, c) in a.d_elem(w.a0) {
        out.push((Word { a0: *k, letters: w.letters.clone() }, c.clone()));
    }
    for i in 0..n {
        let s = sign_i(prefix[i]);
        for (k, c) in a.d_elem(w.letters[i]) {
            let mut letters = w.letters.clone();
            letters[i] = *k;
            out.push((Word { a0: w.a0, letters }, c * Q::from_integer((-s).into())));
        }
    }
    if n == 0 {
        return out;
    }
    for (k, c) in a.product(w.a0, w.letters[0]) {
        out.push((
            Word { a0: *k, letters: w.letters[1..].to_vec() },
            c * Q::from_integer(sign_i(a0deg).into()),
        ));
    }
    for i in 0..n.saturating_sub(1) {
        let s = sign_i(prefix[i + 1]);
        for (k, c) in a.product(w.letters[i], w.letters[i + 1]) {
            let mut letters = Vec::with_capacity(n - 1);
            letters.extend_from_slice(&w.letters[..i]);
            letters.push(*k);
            letters.extend_from_slice(&w.letters[i + 2..]);
            out.push((Word { a0: w.a0, letters }, c * Q::from_integer(s.into())));
        }
    }
    let eta_n = shifted(a.deg(w.letters[n - 1]));
    let s = sign_i(eta_n * prefix[n - 1]);
    for (k, c) in a.product(w.letters[n - 1], w.a0) {
        out.push((
            Word { a0: *k, letters: w.letters[..n - 1].to_vec() },
            c * Q::from_integer((-s).into()),
        ));
    }
    out
}

/// The canonical inclusion of normalized words into the full complex,
/// where it happens to be a chain map (products of ideal elements stay in
/// the ideal, e.g. square-zero extensions).
pub fn normalized_into_full(
    norm: &HochschildChains,
    full: &Complex,
    w: Window,
) -> Result<GradedMap, Error> {
    let chains = norm;
    let a = &chains.algebra;
    let mut b = MapBuilder::new(0, &chains.mixed.complex.space, &full.space);
    for (n, ws) in &chains.words {
        if *n < w.lo - 1 || *n > w.hi + 1 {
            continue;
        }
        for (col, wd) in ws.iter().enumerate() {
            let lbl = wd.label(a);
            let row = full
                .space
                .labels(*n)
                .iter()
                .position(|l| *l == lbl)
                .ok_or_else(|| Error::TruncationInsufficient("word missing in full complex".into()))?;
            b.push(*n, col, row, Q::one());
        }
    }
    Ok(b.finish())
}

#[cfg(test)]
mod tests;

/// Development helper: print `b` and `B` of every word up to a length.
#[doc(hidden)]
pub fn debug_dump(a: &DgAlgebra, max_len: usize) {
    let letters = a.ideal_basis();
    let mut words = vec![];
    for a0 in 0..a.dim() {
        words.push(Word { a0, letters: vec![] });
    }
    for _ in 0..max_len {
        let mut next = vec![];
        for w in &words {
            for &l in &letters {
                let mut ls = w.letters.clone();
                ls.push(l);
                next.push(Word { a0: w.a0, letters: ls });
            }
        }
        words.extend(next);
        words.sort();
        words.dedup();
    }
    for w in &words {
        if w.letters.len() > max_len { continue; }
        let b = collect_words(boundary_terms(a, w, |i, j| a.product(i, j).to_vec()));
        let bb = collect_words(connes_terms(a, w));
        let show = |ts: &[(Word, Q)]| -> String {
            ts.iter().map(|(t, c)| format!("{} {}", c, t.label(a))).collect::<Vec<_>>().join(" + ")
        };
        println!("w = {:<20} deg {}   b = {:<30} B = {}", w.label(a), w.degree(a), show(&b), show(&bb));
    }
}
