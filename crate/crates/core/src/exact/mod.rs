//! Exact scalar, polynomial and matrix arithmetic.

mod linalg;
mod matrix;
mod nilpotent;
pub mod parse;
mod poly;
mod scalar;

pub use linalg::{bareiss_rank, inverse, kernel_basis, rank, rref, solve, span_basis, vectors_rank};
pub use matrix::{Matrix, Ring};
pub use nilpotent::{exp_nilpotent, nilpotency_index};
pub use parse::{parse_poly, parse_scalar};
pub use poly::{indexed_names, Monomial, MultiPoly};
pub use scalar::Scalar;
