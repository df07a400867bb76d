//! Exact scalars: rationals, weights modulo 1, and cyclotomic fields.

mod cyclotomic;
mod rational;
mod weight;

pub use cyclotomic::{
    cyclotomic_embed, cyclotomic_polynomial, euler_phi, root_of_unity, root_of_unity_rational,
    Cyclotomic,
};
pub use rational::{lcm_denominators, Rational};
pub use weight::{normalize_weight, Convention, FractionalWeight};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("{value} is out of range for the {convention:?} convention")]
    OutOfRange {
        value: String,
        convention: Convention,
    },
    #[error("{value} does not lie in the cyclotomic field of order {order}")]
    DenominatorNotDividing { value: String, order: u64 },
    #[error("order {from} does not divide {to}")]
    IncompatibleOrders { from: u64, to: u64 },
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("order {order} needs {expected} coefficients, found {found}")]
    CoefficientCount {
        order: u64,
        expected: usize,
        found: usize,
    },
}

impl ScalarError {
    pub fn code(&self) -> &'static str {
        match self {
            ScalarError::DivisionByZero => "DivisionByZero",
            ScalarError::Parse(_) => "Parse",
            ScalarError::OutOfRange { .. } => "OutOfRange",
            ScalarError::DenominatorNotDividing { .. } => "DenominatorNotDividing",
            ScalarError::IncompatibleOrders { .. } => "IncompatibleOrders",
            ScalarError::ZeroOrder => "ZeroOrder",
            ScalarError::CoefficientCount { .. } => "CoefficientCount",
        }
    }
}
