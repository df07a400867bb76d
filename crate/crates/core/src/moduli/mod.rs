//! Bookkeeping around the moduli spaces: covering data, the index set of
//! fixed-point strata, degree pairings and the degree scaling along the
//! cover.

use thiserror::Error;

use crate::cohomology::CohomologyError;
use crate::lie::LieError;
use crate::pseudorep::PseudoRepError;

mod covering;
mod degree;
mod strata;

pub use covering::{riemann_hurwitz, CoveringData, RiemannHurwitz};
pub use degree::{
    degree_pairing, degree_scaling_check, stability_verdict, FlagDegreeData, GradedPiece,
    ScalingVerdict, StabilityMode, StabilityVerdict,
};
pub use strata::{
    enumerate_strata, quotient_classes, CocycleCounts, StrataEnumeration, StratumIndex, MAX_STRATA,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuliError {
    #[error("invalid covering data: {0}")]
    InvalidCovering(String),
    #[error("genus of Y is not an integer: {0}")]
    NonIntegralGenus(String),
    #[error("genus of Y would be {0}")]
    NegativeGenus(i64),
    #[error("no abelian cover has this branching: {0}")]
    UnrealizableBranching(String),
    #[error("invalid flag data: {0}")]
    InvalidFlag(String),
    #[error("{0}")]
    InvalidCenter(String),
    #[error("scale exceeded: {0}")]
    ScaleExceeded(String),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    PseudoRep(#[from] PseudoRepError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

impl ModuliError {
    pub fn code(&self) -> &'static str {
        match self {
            ModuliError::InvalidCovering(_) => "InvalidCovering",
            ModuliError::NonIntegralGenus(_) => "NonIntegralGenus",
            ModuliError::NegativeGenus(_) => "NegativeGenus",
            ModuliError::UnrealizableBranching(_) => "UnrealizableBranching",
            ModuliError::InvalidFlag(_) => "InvalidFlag",
            ModuliError::InvalidCenter(_) => "InvalidCenter",
            ModuliError::ScaleExceeded(_) => "ScaleExceeded",
            ModuliError::Cohomology(e) => e.code(),
            ModuliError::PseudoRep(e) => e.code(),
            ModuliError::Lie(e) => e.code(),
        }
    }
}
