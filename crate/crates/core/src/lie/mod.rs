//! Matrix models of (H^ℂ, 𝔪^ℂ), alcove normalization, eigenspaces of the
//! adjoint action of a torus element and parabolic masks.

use thiserror::Error;

mod alcove;
mod model;
mod parabolic;

pub use alcove::{
    alcove_normalize, check_alcove_form, isotropy_eigenspaces, Eigenspace, WeightVector,
};
pub use model::{bracket_violation, unit_bracket, GroupModel, Mask};
pub use parabolic::{parabolic_from_s, ClosureFailure, ParabolicData};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("invalid group model: {0}")]
    InvalidModel(String),
    #[error("expected {expected} exponents, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("exponents sum to {0}, not an integer; not an element of SL")]
    NotSpecial(String),
    #[error("weight vector ({0}) is not in alcove form")]
    NotAlcoveForm(String),
    #[error("s is not in i𝔥: {0}")]
    NotInIH(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl LieError {
    pub fn code(&self) -> &'static str {
        match self {
            LieError::InvalidModel(_) => "InvalidModel",
            LieError::RankMismatch { .. } => "RankMismatch",
            LieError::NotSpecial(_) => "NotSpecial",
            LieError::NotAlcoveForm(_) => "NotAlcoveForm",
            LieError::NotInIH(_) => "NotInIH",
            LieError::Inconsistent(_) => "Inconsistent",
        }
    }
}
