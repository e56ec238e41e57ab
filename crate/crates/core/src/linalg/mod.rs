//! Exact dense linear algebra over ℤ and ℚ.
//!
//! Everything is arbitrary precision. Determinants and inverses use
//! fraction-free elimination; the Smith form pivots on the smallest
//! non-zero entry so results are deterministic.

mod matrix;
mod snf;

pub use matrix::{adjugate, det, inverse, solve_integral, sylvester_negdef, IntMatrix, RatMatrix};
pub use snf::{smith_normal_form, smith_normal_form_with_transform, SmithForm};
