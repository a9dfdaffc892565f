//! Exact linear algebra over the rationals: formal linear combinations,
//! sparse matrices, fraction-free elimination (rank, kernel, image, solving),
//! and chain complexes with homology dimensions.

mod complex;
mod elim;
mod lincomb;
mod matrix;

pub use complex::ChainComplexSpec;
pub use lincomb::{BasisIndex, LinComb};
pub use matrix::{induced_action_trace, Solver, SparseRationalMatrix};
