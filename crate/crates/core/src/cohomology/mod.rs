//! Normalized 2-cocycles of finite abelian groups with values in a finite
//! cyclic group of roots of unity (trivial action), their cohomology classes
//! and central extensions.

mod cochain;
mod extension;
mod group;

pub use cochain::{
    are_cohomologous, class_representative, coboundary, enumerate_coboundaries, enumerate_cocycles,
    h2_classes, restrict, zeta, Cochain2, CocycleWitness,
};
pub use extension::{central_extension, ExtensionGroup};
pub use group::{FiniteAbelianGroup, SubgroupEmbedding};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Limits on brute-force searches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScaleBounds {
    pub max_group_order: u64,
    pub max_coeff_order: u64,
    /// Largest admissible number of normalized functions Γ → Z′, i.e. `m^{|Γ|-1}`.
    pub max_search: u64,
}

impl Default for ScaleBounds {
    fn default() -> Self {
        ScaleBounds {
            max_group_order: 8,
            max_coeff_order: 8,
            max_search: 1 << 21,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("invalid group factors {0}")]
    InvalidGroup(String),
    #[error("invalid coefficient group order {0}")]
    InvalidCoefficients(u64),
    #[error("table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("cochain is not normalized at element {element}")]
    NotNormalized { element: usize },
    #[error("value {value} is not an {order}-th root of unity")]
    ValueNotInCoefficients { value: String, order: u64 },
    #[error("cochains live over different groups or coefficients")]
    ShapeMismatch,
    #[error("operand {which} is not a cocycle; identity fails at {triple:?}")]
    NotACocycle { which: usize, triple: [usize; 3] },
    #[error(
        "brute-force search too large: |Γ| = {group_order}, m = {coeff_order}, {search} functions"
    )]
    ScaleExceeded {
        group_order: u64,
        coeff_order: u64,
        search: u128,
    },
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl CohomologyError {
    pub fn code(&self) -> &'static str {
        match self {
            CohomologyError::InvalidGroup(_) => "InvalidGroup",
            CohomologyError::InvalidCoefficients(_) => "InvalidCoefficients",
            CohomologyError::TableShape { .. } => "TableShape",
            CohomologyError::NotNormalized { .. } => "NotNormalized",
            CohomologyError::ValueNotInCoefficients { .. } => "ValueNotInCoefficients",
            CohomologyError::ShapeMismatch => "ShapeMismatch",
            CohomologyError::NotACocycle { .. } => "NotACocycle",
            CohomologyError::ScaleExceeded { .. } => "ScaleExceeded",
            CohomologyError::NotASubgroup(_) => "NotASubgroup",
            CohomologyError::Inconsistent(_) => "Inconsistent",
        }
    }
}
