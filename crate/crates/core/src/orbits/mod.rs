//! Orbit strata of the boundary `P(m)`, stratified modality, and orbit
//! censuses of quadric orbit closures.

mod census;
mod strata;

pub use census::{
    closure_orbit_census, closure_quadric, quadric_boundary_analysis, Census, CensusRow,
    CensusVerdict, ClosureQuadric, Locus, QuadricBoundary,
};
pub(crate) use strata::{random_gaussian, stratum_rng};
pub use strata::{
    generic_orbit_dim, modality_table, orbit_dim_at, SampleOptions, StrataRow, StrataTable, Stratum,
};
