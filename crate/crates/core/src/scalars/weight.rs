use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Rational, ScalarError};

/// Which representative of a class in ℚ/ℤ a weight carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Convention {
    /// `0 <= value < 1`.
    #[serde(rename = "zero_one")]
    ResidueInZeroOne,
    /// `-1 < value < 1`, keeping the sign of the input.
    #[serde(rename = "signed")]
    SignedRepresentative,
}

/// A rational number read modulo 1, stored as a fixed representative.
///
/// Used both for alcove weights (residues in `[0, 1)`) and for the
/// eigenvalue exponents `β` of the adjoint action (signed, in `(-1, 1)`).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWeight")]
pub struct FractionalWeight {
    value: Rational,
    convention: Convention,
}

impl FractionalWeight {
    /// Builds a weight, rejecting values outside the convention's range.
    pub fn new(value: Rational, convention: Convention) -> Result<Self, ScalarError> {
        if !in_range(&value, convention) {
            return Err(ScalarError::OutOfRange {
                value: value.to_string(),
                convention,
            });
        }
        Ok(FractionalWeight { value, convention })
    }

    pub fn zero(convention: Convention) -> Self {
        FractionalWeight {
            value: Rational::zero(),
            convention,
        }
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn into_value(self) -> Rational {
        self.value
    }

    /// True when the two weights differ by an integer.
    pub fn congruent(&self, other: &FractionalWeight) -> bool {
        (&self.value - &other.value).is_integer()
    }

    /// Same class, other representative.
    pub fn with_convention(&self, convention: Convention) -> Self {
        normalize_weight(&self.value, convention)
    }

    /// Smallest `d > 0` with `d * value` integral.
    pub fn denominator(&self) -> u64 {
        self.value.denom_u64()
    }
}

impl fmt::Debug for FractionalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.value)
    }
}

impl PartialOrd for FractionalWeight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FractionalWeight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value
            .cmp(&other.value)
            .then(self.convention.cmp(&other.convention))
    }
}

#[derive(Deserialize)]
struct RawWeight {
    value: Rational,
    convention: Convention,
}

impl TryFrom<RawWeight> for FractionalWeight {
    type Error = ScalarError;

    fn try_from(raw: RawWeight) -> Result<Self, Self::Error> {
        FractionalWeight::new(raw.value, raw.convention)
    }
}

fn in_range(value: &Rational, convention: Convention) -> bool {
    match convention {
        Convention::ResidueInZeroOne => !value.is_negative() && *value < Rational::one(),
        Convention::SignedRepresentative => value.abs() < Rational::one(),
    }
}

/// Reduces `x` modulo 1 into the range of `convention`.
///
/// `ResidueInZeroOne` takes `x - floor(x)`. `SignedRepresentative` removes the
/// integer part toward zero, so values already in `(-1, 1)` are unchanged and
/// the result keeps the sign of `x` (or is zero).
pub fn normalize_weight(x: &Rational, convention: Convention) -> FractionalWeight {
    let value = match convention {
        Convention::ResidueInZeroOne => x.fract_floor(),
        Convention::SignedRepresentative => x - &x.trunc(),
    };
    FractionalWeight { value, convention }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn documented_examples() {
        let a = normalize_weight(&q(7, 3), Convention::ResidueInZeroOne);
        assert_eq!(a.value(), &q(1, 3));
        let b = normalize_weight(&q(-1, 2), Convention::SignedRepresentative);
        assert_eq!(b.value(), &q(-1, 2));
        let c = normalize_weight(&q(5, 4), Convention::SignedRepresentative);
        assert_eq!(c.value(), &q(1, 4));
    }

    #[test]
    fn negative_residue() {
        let a = normalize_weight(&q(-1, 3), Convention::ResidueInZeroOne);
        assert_eq!(a.value(), &q(2, 3));
        let b = normalize_weight(&q(-7, 3), Convention::SignedRepresentative);
        assert_eq!(b.value(), &q(-1, 3));
        let c = normalize_weight(&Rational::from_int(-3), Convention::SignedRepresentative);
        assert!(c.value().is_zero());
    }

    #[test]
    fn construction_checks_range() {
        assert!(FractionalWeight::new(q(1, 1), Convention::ResidueInZeroOne).is_err());
        assert!(FractionalWeight::new(q(-1, 2), Convention::ResidueInZeroOne).is_err());
        assert!(FractionalWeight::new(q(-1, 2), Convention::SignedRepresentative).is_ok());
        assert!(FractionalWeight::new(q(-1, 1), Convention::SignedRepresentative).is_err());
    }

    #[test]
    fn json_shape() {
        let w = normalize_weight(&q(1, 3), Convention::SignedRepresentative);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"value":"1/3","convention":"signed"}"#);
        let back: FractionalWeight = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
    }
}
