//! The sign helpers behind every construction in this crate.
//!
//! `signs.md` at the repository root is the normative description; this
//! module is its executable counterpart. All modules (and their tests) go
//! through these helpers rather than inlining `(-1)^...` arithmetic, so a
//! convention change happens in exactly one place.
//!
//! The one rule: moving something of parity `a` past something of parity
//! `b` costs `(-1)^{ab}`. Tensor-word entries in bar-type constructions are
//! counted with their *shifted* degree `|x| + 1`; the module-slot entry of
//! a Hochschild word keeps its plain degree.

use crate::graded::Deg;
use crate::linalg::{qi, Q};

/// `(-1)^{ab}` as a rational.
pub fn koszul(a: Deg, b: Deg) -> Q {
    sign(a * b)
}

/// `(-1)^n` as a rational.
pub fn sign(n: Deg) -> Q {
    if n.rem_euclid(2) == 0 {
        qi(1)
    } else {
        qi(-1)
    }
}

/// `(-1)^n` as an i64, for composing several signs cheaply.
pub fn sign_i(n: Deg) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Shifted (bar) degree of a letter of plain degree `d`.
pub fn shifted(d: Deg) -> Deg {
    d + 1
}

/// Sign of the differential acting on an `n`-fold shift: `(-1)^n`.
pub fn shift_diff(n: Deg) -> Q {
    sign(n)
}

/// Sign rule for the dual differential: `(d f)(x) = -(-1)^{|f|} f(d x)`,
/// so the matrix block of the dual differential at degree `-n` is
/// `-(-1)^{n-1}` times the transpose of the block `d: M_n -> M_{n-1}`.
pub fn dual_diff(f_degree: Deg) -> Q {
    -sign(f_degree)
}

/// Koszul sign of the permutation sorting `degs` ascending by the given
/// ordering keys, i.e. the sign picked up when reordering homogeneous
/// elements `x_1 ... x_k` (with parities `degs[i]`) into the order given by
/// `keys`. Stable: equal keys do not cross.
pub fn sort_sign<K: Ord + Copy>(keys: &[K], degs: &[Deg]) -> i64 {
    assert_eq!(keys.len(), degs.len());
    // insertion sort, accumulating the crossing signs
    let mut keys = keys.to_vec();
    let mut degs = degs.to_vec();
    let mut s = 1i64;
    for i in 1..keys.len() {
        let mut j = i;
        while j > 0 && keys[j - 1] > keys[j] {
            s *= sign_i(degs[j - 1] * degs[j]);
            keys.swap(j - 1, j);
            degs.swap(j - 1, j);
            j -= 1;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert_eq!(koszul(1, 1), qi(-1));
        assert_eq!(koszul(2, 1), qi(1));
        assert_eq!(koszul(-1, 1), qi(-1));
        assert_eq!(sign(-3), qi(-1));
    }

    #[test]
    fn sort_sign_swaps() {
        // swapping two odd elements costs -1
        assert_eq!(sort_sign(&[2, 1], &[1, 1]), -1);
        // swapping odd past even costs +1
        assert_eq!(sort_sign(&[2, 1], &[2, 1]), 1);
        // already sorted costs nothing
        assert_eq!(sort_sign(&[1, 2, 3], &[1, 1, 1]), 1);
        // three odd elements reversed: three adjacent transpositions
        assert_eq!(sort_sign(&[3, 2, 1], &[1, 1, 1]), -1);
    }
}
