//! Exact linear algebra over ℚ and GF(p).

pub mod matrix;
pub mod scalar;
pub mod solve;

pub use matrix::{LinearMap, SparseVec};
pub use scalar::{Field, Rational, Scalar};
pub use solve::{LinearSystem, SolutionSpace};
