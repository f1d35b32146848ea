//! Exact linear algebra over the rationals.
//!
//! Everything in this crate computes with arbitrary-precision rational
//! numbers; there is no floating point and no rounding anywhere. The
//! elimination routines use a fixed leftmost-pivot order so that results
//! are deterministic, and all values are immutable after construction.

pub mod jordan;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod vecops;

pub use jordan::{jordan_chevalley, min_poly};
pub use matrix::{nullspace, rank, rref, solve, solve_many, Matrix};
pub use poly::Polynomial;
pub use scalar::{int, ratio, two_pow, Scalar};
