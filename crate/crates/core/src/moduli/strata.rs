use serde::{Deserialize, Serialize};

use super::{CoveringData, ModuliError};
use crate::cohomology::{h2_classes, zeta, Cochain2, FiniteAbelianGroup, ScaleBounds};
use crate::lie::GroupModel;
use crate::pseudorep::{
    canonical_shift, enumerate_classes, project_mod_center, MatrixModel, QuotientClass,
};
use crate::scalars::{normalize_weight, Convention, Rational};

/// Largest number of strata [`enumerate_strata`] will list.
pub const MAX_STRATA: usize = 100_000;

/// One index `([c], ([σ_j])_j)` with one quotient class per branch orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumIndex {
    pub cocycle: Cochain2,
    pub classes: Vec<QuotientClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocycleCounts {
    pub cocycle: Cochain2,
    /// Quotient classes available at each branch orbit for this cocycle.
    pub per_orbit: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrataEnumeration {
    pub count: usize,
    pub h2_count: usize,
    pub per_cocycle: Vec<CocycleCounts>,
    /// Whether the per-orbit counts are the same for every cocycle, so the
    /// total is `|H²| · ∏_j |R_j|`.
    pub factorizes: bool,
    pub strata: Vec<StratumIndex>,
}

/// Quotient classes of pseudorepresentations of ℤ/n in the model's
/// `H^ℂ` with `σ(γ)ⁿ = e^{2πi·target}`, modulo the central `μ_m`.
pub fn quotient_classes(
    model: GroupModel,
    n: u64,
    target: &Rational,
    center_order: u64,
) -> Result<Vec<QuotientClass>, ModuliError> {
    let mut out: Vec<QuotientClass> = match model {
        GroupModel::ComplexGl(r) => enumerate_classes(n, r, target, MatrixModel::Gl)?
            .iter()
            .map(|c| project_mod_center(c, center_order))
            .collect(),
        GroupModel::ComplexSl(r) => {
            if !(r as u64).is_multiple_of(center_order) {
                return Err(ModuliError::InvalidCenter(format!(
                    "μ_{center_order} is not central in SL({r})"
                )));
            }
            enumerate_classes(n, r, target, MatrixModel::Sl)?
                .iter()
                .map(|c| project_mod_center(c, center_order))
                .collect()
        }
        GroupModel::Upq(p, q) => {
            let left = enumerate_classes(n, p, target, MatrixModel::Gl)?;
            let right = enumerate_classes(n, q, target, MatrixModel::Gl)?;
            let mut v = Vec::with_capacity(left.len() * right.len());
            for a in &left {
                for b in &right {
                    v.push(QuotientClass {
                        order: n,
                        center_order,
                        exponents: canonical_shift(
                            &[a.exponents.clone(), b.exponents.clone()],
                            center_order,
                        ),
                    });
                }
            }
            v
        }
    };
    out.sort();
    out.dedup();
    Ok(out)
}

/// Enumerates the index set `H²(Γ, Z′) × ∏_orbits R(Γ_x, H^ℂ/Z′)` for a
/// cyclic `Γ = ℤ/N` and `Z′ = μ_m`.
///
/// For a cocycle `c`, a pseudorepresentation of the isotropy group `ℤ/N_j`
/// (generated by `N/N_j`) satisfies `σ(γ)^{N_j} = ζ(γ)⁻¹`, so the available
/// classes depend on `c` through `ζ`. Classes are listed per orbit, since
/// deck transformations identify the classes at points of one orbit.
pub fn enumerate_strata(
    covering: &CoveringData,
    center_order: u64,
    model: GroupModel,
    bounds: &ScaleBounds,
) -> Result<StrataEnumeration, ModuliError> {
    covering.validate()?;
    let model = model.validate()?;
    let big_n = covering.group_order;
    let gamma = FiniteAbelianGroup::cyclic(big_n);
    let reps = h2_classes(&gamma, center_order, bounds)?;
    let m = center_order as i64;

    let mut per_cocycle = Vec::with_capacity(reps.len());
    let mut strata = Vec::new();
    for c in &reps {
        let mut orbit_classes = Vec::with_capacity(covering.orbits.len());
        for &nj in &covering.orbits {
            let generator = (big_n / nj) as usize;
            let k = zeta(c, generator) as i64;
            let target =
                normalize_weight(&Rational::new(-k, m), Convention::ResidueInZeroOne).into_value();
            orbit_classes.push(quotient_classes(model, nj, &target, center_order)?);
        }
        let per_orbit: Vec<usize> = orbit_classes.iter().map(Vec::len).collect();
        let product = per_orbit
            .iter()
            .try_fold(1usize, |acc, &x| acc.checked_mul(x));
        match product {
            Some(p) if strata.len() + p <= MAX_STRATA => {}
            _ => return Err(ModuliError::ScaleExceeded("too many strata to list".into())),
        }
        let mut idx = vec![0usize; orbit_classes.len()];
        if per_orbit.iter().all(|&x| x > 0) {
            loop {
                strata.push(StratumIndex {
                    cocycle: c.clone(),
                    classes: idx
                        .iter()
                        .zip(&orbit_classes)
                        .map(|(&i, cl)| cl[i].clone())
                        .collect(),
                });
                // odometer over the per-orbit class lists, last orbit fastest
                let mut pos = idx.len();
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < orbit_classes[pos].len() {
                        break;
                    }
                    idx[pos] = 0;
                }
                if idx.iter().all(|&i| i == 0) {
                    break;
                }
            }
        }
        per_cocycle.push(CocycleCounts {
            cocycle: c.clone(),
            per_orbit,
        });
    }
    let factorizes = per_cocycle
        .windows(2)
        .all(|w| w[0].per_orbit == w[1].per_orbit);
    Ok(StrataEnumeration {
        count: strata.len(),
        h2_count: reps.len(),
        per_cocycle,
        factorizes,
        strata,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cov(n: u64, orbits: &[u64]) -> CoveringData {
        CoveringData {
            genus_x: 2,
            group_order: n,
            orbits: orbits.to_vec(),
        }
    }

    #[test]
    fn worked_examples() {
        let b = ScaleBounds::default();
        let e = enumerate_strata(&cov(2, &[2]), 2, GroupModel::ComplexGl(1), &b).unwrap();
        assert_eq!((e.h2_count, e.count), (2, 2));
        let e = enumerate_strata(&cov(1, &[]), 3, GroupModel::ComplexGl(2), &b).unwrap();
        assert_eq!(e.count, 1);
        let e = enumerate_strata(&cov(2, &[2]), 1, GroupModel::ComplexGl(2), &b).unwrap();
        assert_eq!(e.count, 3);
        let exps: Vec<Vec<Rational>> = e
            .strata
            .iter()
            .map(|s| s.classes[0].exponents[0].clone())
            .collect();
        assert_eq!(
            exps,
            vec![
                vec![Rational::zero(), Rational::zero()],
                vec![Rational::new(1, 2), Rational::zero()],
                vec![Rational::new(1, 2), Rational::new(1, 2)],
            ]
        );
    }

    #[test]
    fn gl_counts_factorize() {
        let b = ScaleBounds::default();
        for (n, m, orbits) in [
            (2u64, 2u64, vec![2u64, 2]),
            (4, 2, vec![2, 4]),
            (3, 3, vec![3]),
            (4, 4, vec![4, 2]),
        ] {
            let e = enumerate_strata(&cov(n, &orbits), m, GroupModel::ComplexGl(2), &b).unwrap();
            assert!(e.factorizes);
            let prod: usize = e.per_cocycle[0].per_orbit.iter().product();
            assert_eq!(e.count, e.h2_count * prod);
        }
    }

    #[test]
    fn sl_needs_central_subgroup() {
        let b = ScaleBounds::default();
        assert!(matches!(
            enumerate_strata(&cov(2, &[2]), 3, GroupModel::ComplexSl(2), &b),
            Err(ModuliError::InvalidCenter(_))
        ));
        let e = enumerate_strata(&cov(2, &[2]), 2, GroupModel::ComplexSl(2), &b).unwrap();
        assert_eq!(
            e.count,
            e.per_cocycle.iter().map(|c| c.per_orbit[0]).sum::<usize>()
        );
    }

    #[test]
    fn upq_pairs_blocks() {
        let b = ScaleBounds::default();
        let e = enumerate_strata(&cov(2, &[2]), 1, GroupModel::Upq(1, 1), &b).unwrap();
        // each block independently 0 or 1/2
        assert_eq!(e.count, 4);
        let e = enumerate_strata(&cov(2, &[2]), 2, GroupModel::Upq(1, 1), &b).unwrap();
        // the common shift by 1/2 pairs them up, for each of the two cocycles
        assert_eq!(e.count, 4);
    }
}
