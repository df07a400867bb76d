use serde::{Deserialize, Serialize};

use super::ModuliError;
use crate::scalars::Rational;

/// Rank and degree of one graded piece of a reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedPiece {
    pub rank: usize,
    pub degree: i64,
}

/// Combinatorial data of a reduction to a parabolic `P_s` in the split
/// diagonal regime: the eigenvalues of `s` with multiplicity, one graded
/// piece per distinct eigenvalue (in order of first appearance), and
/// optional per-point parabolic weight contributions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagDegreeData {
    pub s: Vec<Rational>,
    pub pieces: Vec<GradedPiece>,
    #[serde(default)]
    pub corrections: Vec<Rational>,
}

impl FlagDegreeData {
    /// Distinct values of `s` in order of first appearance, with multiplicity.
    pub fn distinct_values(&self) -> Vec<(Rational, usize)> {
        let mut out: Vec<(Rational, usize)> = Vec::new();
        for v in &self.s {
            match out.iter_mut().find(|(x, _)| x == v) {
                Some(entry) => entry.1 += 1,
                None => out.push((v.clone(), 1)),
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), ModuliError> {
        let values = self.distinct_values();
        if values.len() != self.pieces.len() {
            return Err(ModuliError::InvalidFlag(format!(
                "{} distinct values of s but {} graded pieces",
                values.len(),
                self.pieces.len()
            )));
        }
        for ((v, mult), piece) in values.iter().zip(&self.pieces) {
            if piece.rank != *mult {
                return Err(ModuliError::InvalidFlag(format!(
                    "eigenvalue {v} has multiplicity {mult} but its piece has rank {}",
                    piece.rank
                )));
            }
        }
        Ok(())
    }
}

/// `∑_v v · deg(E_v) + ∑ corrections` over distinct eigenvalues `v` of `s`.
pub fn degree_pairing(flag: &FlagDegreeData) -> Result<Rational, ModuliError> {
    flag.validate()?;
    let main = flag
        .distinct_values()
        .iter()
        .zip(&flag.pieces)
        .fold(Rational::zero(), |acc, ((v, _), p)| {
            &acc + &(v * &Rational::from_int(p.degree))
        });
    Ok(flag.corrections.iter().fold(main, |acc, c| &acc + c))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StabilityMode {
    Semistable,
    Stable,
}

/// Verdict relative to the supplied candidate reductions only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityVerdict {
    pub mode: StabilityMode,
    pub holds: bool,
    pub pairings: Vec<Rational>,
    /// Index of the first candidate violating the inequality.
    pub violator: Option<usize>,
    pub candidates_checked: usize,
}

pub fn stability_verdict(
    candidates: &[FlagDegreeData],
    mode: StabilityMode,
) -> Result<StabilityVerdict, ModuliError> {
    let pairings = candidates
        .iter()
        .map(degree_pairing)
        .collect::<Result<Vec<_>, _>>()?;
    let violator = pairings.iter().position(|p| match mode {
        StabilityMode::Semistable => p.is_negative(),
        StabilityMode::Stable => !p.is_positive(),
    });
    Ok(StabilityVerdict {
        mode,
        holds: violator.is_none(),
        pairings,
        violator,
        candidates_checked: candidates.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScalingVerdict {
    pub expected_deg_x: Rational,
    pub scaling_ok: bool,
    pub integral: bool,
}

/// Compares a degree on the cover with `N` times the parabolic degree below.
pub fn degree_scaling_check(
    par_deg_y: &Rational,
    group_order: u64,
    claimed_deg_x: &Rational,
) -> Result<ScalingVerdict, ModuliError> {
    if group_order == 0 {
        return Err(ModuliError::InvalidCovering("group order is zero".into()));
    }
    let expected = par_deg_y * &Rational::from_int(group_order as i64);
    Ok(ScalingVerdict {
        scaling_ok: &expected == claimed_deg_x,
        integral: claimed_deg_x.is_integer(),
        expected_deg_x: expected,
    })
}
