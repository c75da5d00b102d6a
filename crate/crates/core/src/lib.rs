//! Graded homological algebra over the rationals, done exactly.
//!
//! Everything in this crate is a finite-dimensional rational chain-level
//! object: graded vector spaces with labeled bases, degree -1 differentials
//! stored as sparse matrices of exact rationals, and the constructions that
//! produce them (Hochschild chains with the Connes operator, bar complexes
//! and their duals, free graded Lie algebras, enveloping algebras,
//! Chevalley-Eilenberg cochains, first-order deformations).
//!
//! Truncation is explicit: operations that materialize an a-priori infinite
//! object take a [`Window`](graded::Window) and certify the degree range on
//! which the answer is exact, or fail with
//! [`TruncationInsufficient`](error::Error::TruncationInsufficient).
//! There is no floating point anywhere; homology ranks come from
//! fraction-free elimination over arbitrary-precision integers.
//!
//! Sign conventions are fixed once, in `signs.md` at the repository root,
//! and exposed programmatically through the [`signs`] module. The test
//! suites across all modules exercise the same conventions.


pub mod complex;
pub mod dg;
pub mod hochschild;


pub mod error;
pub mod gmap;
pub mod graded;


pub mod linalg;

pub mod signs;

pub use complex::{Complex, MixedComplex};

pub use dg::{DgAlgebra, DgLieAlgebra, SquareZeroExtension};
pub use error::Error;
pub use gmap::GradedMap;
pub use graded::{Deg, DimTable, GradedSpace, Window};
pub use linalg::{SparseMat, Q};
