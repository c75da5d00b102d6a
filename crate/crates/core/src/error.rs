//! Error type shared across the crate.

use crate::graded::{Deg, Window};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree {degree} is outside the materialized/valid window {valid}")]
    WindowUnderflow { degree: Deg, valid: Window },

    #[error("complex is not degreewise finite on the reflected window")]
    NotDegreewiseFinite,

    #[error("map is not a chain map: fails at degree {degree}")]
    NotChainMap { degree: Deg },

    #[error("module must be connective (degrees >= 0); found degree {degree}")]
    NotConnective { degree: Deg },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("algebra has no augmentation")]
    NoAugmentation,

    #[error("algebra is not augmented")]
    NotAugmented,

    #[error("algebra is not commutative")]
    NotCommutative,

    #[error("truncation insufficient: {0}")]
    TruncationInsufficient(String),

    #[error("cochain arity {arity} exceeds the materialized bound {bound}")]
    ArityOverflow { arity: usize, bound: usize },

    #[error("cochain is not a cocycle")]
    NotCocycle,

    #[error("Chevalley-Eilenberg cochains would need completion: degree {degree} receives unboundedly many weights")]
    CompletionRequired { degree: Deg },

    #[error("structure validation failed:\n{0}")]
    Invalid(String),
}
