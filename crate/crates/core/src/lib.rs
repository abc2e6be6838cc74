//! Exact computations with finite-dimensional local algebras and the
//! additive group actions they induce on projective space and on quadrics.
//!
//! - [`exact`]: Gaussian-rational scalars, polynomials, matrices.
//! - [`algebra`]: local algebras, invariants, presentations and their
//!   truncated quotients.
//! - [`corresp`]: algebra ↔ representation ↔ inverse system.
//! - [`quadric`]: the bilinear form `B₀` and the quadric criterion.
//! - [`orbits`]: orbit strata, modality tables, orbit censuses.
//! - [`ortho`]: commutative nilpotent subalgebras of orthogonal algebras.
//! - [`text`], [`builtins`]: file formats and named objects.

pub mod algebra;
pub mod builtins;
pub mod corresp;
mod error;
pub mod exact;
pub mod orbits;
pub mod ortho;
mod par;
pub mod quadric;
pub mod text;

pub use error::Error;
pub use par::Exec;

pub type Result<T> = std::result::Result<T, Error>;
