//! The local correspondence at a ramification point: invariant Higgs fields
//! `f(z) dz` on the cover versus parabolic Higgs fields `f′(w) dw`
//! downstairs, related by the gauge `z^{Nα}` and the substitution `w = z^N`.

use serde::Serialize;
use thiserror::Error;

use crate::lie::{check_alcove_form, parabolic_from_s, LieError};
use crate::pseudorep::CyclotomicMatrix;
use crate::scalars::{lcm_denominators, root_of_unity_rational, Cyclotomic, Rational};

mod series;

pub use series::{decompose_by_beta, GradedSeries, Term, Variable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalError {
    #[error("invalid series: {0}")]
    InvalidSeries(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("expected a series in the variable {expected}")]
    WrongVariable { expected: &'static str },
    #[error("N·twist is not an integer for twist {0}")]
    TwistDenominator(String),
    #[error("series is not invariant; {} violating terms", .0.len())]
    NotInvariant(Vec<Violation>),
    #[error("weight vector is on a wall of the alcove")]
    WeightOnWall,
    #[error("N·α is not integral")]
    NonIntegralGauge,
    #[error("pole coefficient at E_{}{} lies outside the β < 0 eigenspaces", .0[0], .0[1])]
    BadResidueSupport([usize; 2]),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl LocalError {
    pub fn code(&self) -> &'static str {
        match self {
            LocalError::InvalidSeries(_) => "InvalidSeries",
            LocalError::Lie(e) => e.code(),
            LocalError::WrongVariable { .. } => "WrongVariable",
            LocalError::TwistDenominator(_) => "TwistDenominator",
            LocalError::NotInvariant(_) => "NotInvariant",
            LocalError::WeightOnWall => "WeightOnWall",
            LocalError::NonIntegralGauge => "NonIntegralGauge",
            LocalError::BadResidueSupport(_) => "BadResidueSupport",
            LocalError::Inconsistent(_) => "Inconsistent",
        }
    }
}

/// A monomial `E_ij z^k` (1-based) that the generator does not fix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub basis: [usize; 2],
    pub k: i64,
    pub beta: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceVerdict {
    pub invariant: bool,
    pub twist: Rational,
    pub index_criterion: bool,
    pub direct_substitution: bool,
    pub violations: Vec<Violation>,
}

/// Whether the generator of ℤ/N fixes `f(z) dz` up to the character
/// `e^{2πi·twist}`.
///
/// Two computations are made and must agree. The index test asks that
/// `k + 1 + Nβ − N·twist ≡ 0 (mod N)` for each nonzero `a_k^β`. The
/// substitution test evaluates `Ad(e^{2πiα}) f(ζz) d(ζz)` with `ζ = e^{2πi/N}`
/// coefficient by coefficient in exact cyclotomic arithmetic.
pub fn check_invariance(
    series: &GradedSeries,
    twist: Option<&Rational>,
) -> Result<InvarianceVerdict, LocalError> {
    if series.variable() != Variable::Upstairs {
        return Err(LocalError::WrongVariable { expected: "z" });
    }
    let n = series.n() as i64;
    let nn = Rational::from_int(n);
    let twist = twist.cloned().unwrap_or_else(Rational::zero);
    if !(&twist * &nn).is_integer() {
        return Err(LocalError::TwistDenominator(twist.to_string()));
    }

    let mut by_index = Vec::new();
    for ((i, j, k), _) in series.entries() {
        let beta = series.beta(i, j);
        let x = &(&Rational::from_int(k + 1) + &(&nn * &beta)) - &(&nn * &twist);
        let fixed = x.is_integer() && x.to_i64().expect("small").rem_euclid(n) == 0;
        if !fixed {
            by_index.push(Violation {
                basis: [i + 1, j + 1],
                k,
                beta,
            });
        }
    }

    let order = lcm_denominators(series.alpha().iter().chain([&twist, &Rational::new(1, n)]));
    let g = CyclotomicMatrix::diagonal(
        series
            .alpha()
            .iter()
            .map(|a| root_of_unity_rational(a, order).expect("order clears α"))
            .collect(),
    );
    let g_inv = g
        .inverse()
        .map_err(|_| LocalError::Inconsistent("singular torus element".into()))?;
    let chi = root_of_unity_rational(&twist, order).expect("order clears twist");
    let size = series.model().size();
    let mut by_substitution = Vec::new();
    for k in series.exponents() {
        let a = series.coefficient_matrix(k);
        let moved = g
            .mul(&a)
            .mul(&g_inv)
            .scale(&Cyclotomic::zeta_power(k + 1, n as u64));
        let target = a.scale(&chi);
        for i in 0..size {
            for j in 0..size {
                if moved.get(i, j) != target.get(i, j) {
                    by_substitution.push(Violation {
                        basis: [i + 1, j + 1],
                        k,
                        beta: series.beta(i, j),
                    });
                }
            }
        }
    }

    by_index.sort();
    by_substitution.sort();
    if by_index != by_substitution {
        return Err(LocalError::Inconsistent(format!(
            "index criterion flags {by_index:?}, substitution flags {by_substitution:?}"
        )));
    }
    Ok(InvarianceVerdict {
        invariant: by_index.is_empty(),
        twist,
        index_criterion: by_index.is_empty(),
        direct_substitution: by_substitution.is_empty(),
        violations: by_index,
    })
}

fn require_interior_integral(series: &GradedSeries) -> Result<(), LocalError> {
    let alpha = check_alcove_form(series.model(), series.alpha())?;
    if !alpha.is_interior() {
        return Err(LocalError::WeightOnWall);
    }
    let nn = Rational::from_int(series.n() as i64);
    if !series.alpha().iter().all(|a| (a * &nn).is_integer()) {
        return Err(LocalError::NonIntegralGauge);
    }
    Ok(())
}

/// Largest `w`-exponent known for every β-component of a descended series
/// whose `z`-series is known through `trunc`.
///
/// The component of weight β is known through `⌊(T + 1 + Nβ)/N⌋ − 1`; the
/// minimum over β is attained at the smallest β.
pub fn descended_trunc(series: &GradedSeries) -> i64 {
    let nn = Rational::from_int(series.n() as i64);
    series
        .betas()
        .iter()
        .map(|b| {
            let x = &Rational::from_int(series.trunc() + 1) + &(&nn * b);
            (&x * &Rational::new(1, series.n() as i64))
                .floor()
                .to_i64()
                .expect("small")
                - 1
        })
        .min()
        .unwrap_or(series.trunc())
}

/// Largest `z`-exponent known for every component after ascending a series
/// known through `trunc` in `w`.
pub fn ascended_trunc(series: &GradedSeries) -> i64 {
    let n = series.n() as i64;
    let nn = Rational::from_int(n);
    series
        .betas()
        .iter()
        .map(|b| {
            let x = &Rational::from_int(n * (series.trunc() + 1) - 1) - &(&nn * b);
            x.to_i64().expect("Nβ integral")
        })
        .min()
        .unwrap_or(series.trunc())
}

/// Descends an invariant upstairs field to a parabolic field downstairs.
///
/// The gauge `z^{Nα}` multiplies the β-component by `z^{Nβ}`; then
/// `z^{k+Nβ} dz = (1/N) w^{(k+1+Nβ)/N − 1} dw`. Components with β < 0 may
/// acquire a simple pole, and these poles make up the residue.
pub fn descend(series: &GradedSeries) -> Result<(GradedSeries, ResidueReport), LocalError> {
    if series.variable() != Variable::Upstairs {
        return Err(LocalError::WrongVariable { expected: "z" });
    }
    require_interior_integral(series)?;
    let verdict = check_invariance(series, None)?;
    if !verdict.invariant {
        return Err(LocalError::NotInvariant(verdict.violations));
    }
    let n = series.n() as i64;
    let nn = Rational::from_int(n);
    let inv_n = Rational::new(1, n);
    let mut out = series.empty_like(Variable::Downstairs, descended_trunc(series));
    for ((i, j, k), c) in series.entries() {
        let shifted = &Rational::from_int(k + 1) + &(&nn * &series.beta(i, j));
        let e = (&shifted * &inv_n)
            .to_i64()
            .ok_or_else(|| LocalError::Inconsistent("non-integral w exponent".into()))?
            - 1;
        if e < -1 {
            return Err(LocalError::Inconsistent(format!("w exponent {e} below -1")));
        }
        if e <= out.trunc() {
            out.insert(i, j, e, c.scale(&inv_n));
        }
    }
    let report = residue_report(&out)?;
    if !report.in_descended_image {
        return Err(LocalError::Inconsistent(
            "descended residue fails its constraints".into(),
        ));
    }
    Ok((out, report))
}

/// Pulls a parabolic field back along `w = z^N` and undoes the gauge.
///
/// A pole `w^{-1} dw` is allowed only on β < 0 components, which is exactly
/// what keeps the result holomorphic.
pub fn ascend(series: &GradedSeries) -> Result<GradedSeries, LocalError> {
    if series.variable() != Variable::Downstairs {
        return Err(LocalError::WrongVariable { expected: "w" });
    }
    require_interior_integral(series)?;
    let n = series.n() as i64;
    let nn = Rational::from_int(n);
    let mut out = series.empty_like(Variable::Upstairs, ascended_trunc(series).max(-1));
    for ((i, j, e), c) in series.entries() {
        let beta = series.beta(i, j);
        if e == -1 && !beta.is_negative() {
            return Err(LocalError::BadResidueSupport([i + 1, j + 1]));
        }
        let k = (&Rational::from_int(n * (e + 1) - 1) - &(&nn * &beta))
            .to_i64()
            .expect("Nβ integral");
        if k < 0 {
            return Err(LocalError::Inconsistent(format!("negative z exponent {k}")));
        }
        if k <= out.trunc() {
            out.insert(i, j, k, c.scale(&nn));
        }
    }
    let verdict = check_invariance(&out, None)?;
    if !verdict.invariant {
        return Err(LocalError::Inconsistent(
            "ascended series is not invariant".into(),
        ));
    }
    Ok(out)
}

/// The `w^{-1} dw` coefficient of a downstairs field and its constraints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueReport {
    pub residue: CyclotomicMatrix,
    /// Pole coefficients only on β < 0 matrix units.
    pub support_ok: bool,
    pub nilpotent: bool,
    /// Least `p ≥ 1` with `residueᵖ = 0`, when nilpotent.
    pub vanishing_power: Option<usize>,
    /// Projection onto the 𝔪_α⁰ mask.
    pub levi_projection: CyclotomicMatrix,
    pub levi_zero: bool,
    pub in_descended_image: bool,
}

pub fn residue_report(series: &GradedSeries) -> Result<ResidueReport, LocalError> {
    if series.variable() != Variable::Downstairs {
        return Err(LocalError::WrongVariable { expected: "w" });
    }
    let model = series.model();
    let size = model.size();
    let residue = series.coefficient_matrix(-1);
    let support_ok = series
        .entries()
        .filter(|(key, _)| key.2 == -1)
        .all(|((i, j, _), _)| series.beta(i, j).is_negative());
    let mut power = residue.clone();
    let mut vanishing_power = None;
    for p in 1..=size {
        if power.is_zero() {
            vanishing_power = Some(p);
            break;
        }
        power = power.mul(&residue);
    }
    let levi = parabolic_from_s(model, series.alpha())?;
    let mut levi_projection = CyclotomicMatrix::zero(size);
    for (i, j) in levi.m0_s.entries() {
        levi_projection.set(i, j, residue.get(i, j).clone());
    }
    let nilpotent = vanishing_power.is_some();
    let levi_zero = levi_projection.is_zero();
    Ok(ResidueReport {
        residue,
        support_ok,
        nilpotent,
        vanishing_power,
        levi_projection,
        levi_zero,
        in_descended_image: support_ok && nilpotent && levi_zero,
    })
}
