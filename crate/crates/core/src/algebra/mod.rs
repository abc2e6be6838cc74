//! Local algebras given by structure constants, their isomorphism
//! invariants, and reduction of polynomial presentations to structure
//! constants.

mod basis;
mod invariants;
mod local;
mod presentation;

pub use invariants::{InvariantVector, NFactor};
pub use local::{Check, Element, LocalAlgebra, Table, ValidationReport};
pub use presentation::{
    truncated_quotient, truncated_quotient_with, CollapseReport, Presentation, TRUNCATION_CAP,
};
