//! Pseudorepresentations `σ(γγ′) = c(γ,γ′) σ(γ) σ(γ′)` of cyclic isotropy
//! groups in GL(r) and SL(r) over cyclotomic fields.
//!
//! A pseudorepresentation of ℤ/n is stored on every element (index `j` is
//! `γ^j` for the canonical generator `γ`). Conjugacy classes are recorded as
//! the descending multiset of eigenvalue exponents `q` of `σ(γ)`, where an
//! eigenvalue is `e^{2πiq}` with `0 <= q < 1`.
//!
//! Iterating the defining relation gives `σ(γ)ⁿ · ζ(γ) = Id`, with
//! `ζ(γ) = ∏_{i=1}^{n-1} c(γ, γ^i)`. The class therefore records
//! `zeta = σ(γ)ⁿ = ζ(γ)⁻¹`, which is the scalar every eigenvalue `λ`
//! satisfies `λⁿ = zeta` against.

mod matrix;

pub use matrix::{root_multiplicity, CyclotomicMatrix, MAX_MATRIX_SIZE};

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cohomology::{self, Cochain2, CohomologyError, FiniteAbelianGroup};
use crate::scalars::{
    normalize_weight, root_of_unity_rational, Convention, Cyclotomic, FractionalWeight, Rational,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PseudoRepError {
    #[error("matrices have inconsistent sizes")]
    SizeMismatch,
    #[error("matrix size {0} is outside 1..=4")]
    MatrixSize(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("isotropy group must be cyclic of order {expected}, cocycle lives on {found:?}")]
    GroupMismatch { expected: u64, found: Vec<u64> },
    #[error("expected {expected} images, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("not a pseudorepresentation: {0}")]
    NotAPseudoRep(String),
    #[error("enumeration too large: n·r = {0} exceeds 24")]
    ScaleExceeded(u64),
    #[error("isotropy mismatch: {0}")]
    IsotropyMismatch(String),
    #[error("ρ is not a homomorphism ℤ/{from} → ℤ/{to}")]
    NotAHomomorphism { from: u64, to: u64 },
    #[error("eigenvalues are not roots of the expected scalar: found {found} of {size}")]
    EigenvalueExtraction { found: usize, size: usize },
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

impl PseudoRepError {
    pub fn code(&self) -> &'static str {
        match self {
            PseudoRepError::SizeMismatch => "SizeMismatch",
            PseudoRepError::MatrixSize(_) => "MatrixSize",
            PseudoRepError::Singular => "Singular",
            PseudoRepError::GroupMismatch { .. } => "GroupMismatch",
            PseudoRepError::ImageCount { .. } => "ImageCount",
            PseudoRepError::NotAPseudoRep(_) => "NotAPseudoRep",
            PseudoRepError::ScaleExceeded(_) => "ScaleExceeded",
            PseudoRepError::IsotropyMismatch(_) => "IsotropyMismatch",
            PseudoRepError::NotAHomomorphism { .. } => "NotAHomomorphism",
            PseudoRepError::EigenvalueExtraction { .. } => "EigenvalueExtraction",
            PseudoRepError::Cohomology(e) => e.code(),
        }
    }
}

/// Matrix group in which a pseudorepresentation takes values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixModel {
    Gl,
    Sl,
}

/// Outcome of the exhaustive verification of a pseudorepresentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PseudoRepCheck {
    Valid,
    IdentityFails,
    RelationFails { pair: (usize, usize) },
}

/// A map σ: ℤ/n → GL(r) together with its cocycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPseudoRep", into = "RawPseudoRep")]
pub struct PseudoRep {
    order: u64,
    cocycle: Cochain2,
    images: Vec<CyclotomicMatrix>,
}

#[derive(Serialize, Deserialize)]
struct RawPseudoRep {
    order: u64,
    cocycle: Cochain2,
    images: BTreeMap<String, CyclotomicMatrix>,
}

impl TryFrom<RawPseudoRep> for PseudoRep {
    type Error = PseudoRepError;
    fn try_from(raw: RawPseudoRep) -> Result<Self, Self::Error> {
        let mut images: Vec<Option<CyclotomicMatrix>> = vec![None; raw.order as usize];
        for (k, m) in raw.images {
            let idx: usize = k
                .parse()
                .map_err(|_| PseudoRepError::NotAPseudoRep(format!("bad element index {k:?}")))?;
            let slot = images.get_mut(idx).ok_or(PseudoRepError::ImageCount {
                expected: raw.order as usize,
                found: idx + 1,
            })?;
            *slot = Some(m);
        }
        let found = images.iter().filter(|m| m.is_some()).count();
        let images: Option<Vec<_>> = images.into_iter().collect();
        let images = images.ok_or(PseudoRepError::ImageCount {
            expected: raw.order as usize,
            found,
        })?;
        PseudoRep::new(raw.order, raw.cocycle, images)
    }
}

impl From<PseudoRep> for RawPseudoRep {
    fn from(p: PseudoRep) -> Self {
        RawPseudoRep {
            order: p.order,
            cocycle: p.cocycle,
            images: p
                .images
                .into_iter()
                .enumerate()
                .map(|(i, m)| (i.to_string(), m))
                .collect(),
        }
    }
}

impl PseudoRep {
    /// Checks shapes only; use [`verify_pseudorep`] for the defining relation.
    pub fn new(
        order: u64,
        cocycle: Cochain2,
        images: Vec<CyclotomicMatrix>,
    ) -> Result<Self, PseudoRepError> {
        if cocycle.group() != &FiniteAbelianGroup::cyclic(order) {
            return Err(PseudoRepError::GroupMismatch {
                expected: order,
                found: cocycle.group().factors().to_vec(),
            });
        }
        if images.len() != order as usize {
            return Err(PseudoRepError::ImageCount {
                expected: order as usize,
                found: images.len(),
            });
        }
        let r = images[0].size();
        if images.iter().any(|m| m.size() != r) {
            return Err(PseudoRepError::SizeMismatch);
        }
        Ok(PseudoRep {
            order,
            cocycle,
            images,
        })
    }

    /// Extends `σ(γ)` to all of ℤ/n through
    /// `σ(γ^{j+1}) = c(γ, γ^j) σ(γ) σ(γ^j)` starting from `σ(1) = Id`.
    pub fn from_generator(
        cocycle: Cochain2,
        generator_image: CyclotomicMatrix,
    ) -> Result<Self, PseudoRepError> {
        let order = cocycle.group().order() as u64;
        let r = generator_image.size();
        let m = cocycle.coeff_order();
        let mut images = vec![CyclotomicMatrix::identity(r)];
        for j in 1..order as usize {
            let prev = &images[j - 1];
            let c = Cyclotomic::zeta_power(cocycle.get(1, j - 1) as i64, m);
            images.push(generator_image.mul(prev).scale(&c));
        }
        PseudoRep::new(order, cocycle, images)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.images[0].size()
    }

    pub fn cocycle(&self) -> &Cochain2 {
        &self.cocycle
    }

    pub fn images(&self) -> &[CyclotomicMatrix] {
        &self.images
    }

    pub fn image(&self, j: usize) -> &CyclotomicMatrix {
        &self.images[j]
    }

    /// `g⁻¹ σ g`, the pseudorepresentation seen from another point of the fibre.
    pub fn conjugate(&self, g: &CyclotomicMatrix) -> Result<Self, PseudoRepError> {
        let images = self
            .images
            .iter()
            .map(|m| m.conjugate_by(g))
            .collect::<Result<Vec<_>, _>>()?;
        PseudoRep::new(self.order, self.cocycle.clone(), images)
    }
}

/// Checks `σ(1) = Id` and `σ(γγ′) = c(γ,γ′)σ(γ)σ(γ′)` on all `n²` pairs.
pub fn verify_pseudorep(sigma: &PseudoRep) -> PseudoRepCheck {
    let r = sigma.rank();
    if sigma.images[0] != CyclotomicMatrix::identity(r) {
        return PseudoRepCheck::IdentityFails;
    }
    let g = sigma.cocycle.group();
    let m = sigma.cocycle.coeff_order();
    let n = sigma.order as usize;
    for a in 0..n {
        for b in 0..n {
            let c = Cyclotomic::zeta_power(sigma.cocycle.get(a, b) as i64, m);
            let rhs = sigma.images[a].mul(&sigma.images[b]).scale(&c);
            if sigma.images[g.op(a, b)] != rhs {
                return PseudoRepCheck::RelationFails { pair: (a, b) };
            }
        }
    }
    PseudoRepCheck::Valid
}

/// Conjugacy class of a pseudorepresentation of ℤ/n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PseudoRepClass {
    pub order: u64,
    /// `σ(γ)ⁿ = e^{2πi·zeta}`, in `[0, 1)`.
    pub zeta: Rational,
    /// Eigenvalue exponents of `σ(γ)`, descending, each in `[0, 1)`.
    pub exponents: Vec<Rational>,
}

impl PseudoRepClass {
    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn weights(&self) -> Vec<FractionalWeight> {
        self.exponents
            .iter()
            .map(|q| normalize_weight(q, Convention::ResidueInZeroOne))
            .collect()
    }
}

fn sort_desc(v: &mut [Rational]) {
    v.sort_by(|a, b| b.cmp(a));
}

/// Exponents `q ∈ [0,1)` with `e^{2πinq} = e^{2πiz}`: `(z + j)/n`.
fn nth_root_exponents(n: u64, z: &Rational) -> Vec<Rational> {
    let mut v: Vec<Rational> = (0..n as i64)
        .map(|j| {
            normalize_weight(
                &((z + &Rational::from_int(j)) / Rational::from_int(n as i64)),
                Convention::ResidueInZeroOne,
            )
            .into_value()
        })
        .collect();
    v.sort();
    v
}

/// Eigenvalue exponents of `σ(γ)`, read off the characteristic polynomial
/// by trial over the `n`-th roots of `σ(γ)ⁿ`.
pub fn classify(sigma: &PseudoRep) -> Result<PseudoRepClass, PseudoRepError> {
    match verify_pseudorep(sigma) {
        PseudoRepCheck::Valid => {}
        other => return Err(PseudoRepError::NotAPseudoRep(format!("{other:?}"))),
    }
    let n = sigma.order;
    let r = sigma.rank();
    let m = sigma.cocycle.coeff_order();
    let gen = if n == 1 { 0 } else { 1 };
    // σ(γ)ⁿ is forced to be ζ(γ)⁻¹·Id; compute it both ways
    let zeta_k = cohomology::zeta(&sigma.cocycle, gen);
    let zeta = normalize_weight(
        &Rational::new(-(zeta_k as i64), m as i64),
        Convention::ResidueInZeroOne,
    )
    .into_value();
    let power = sigma.images[gen].pow(n);
    let expected = root_of_unity_rational(&zeta, m).expect("k/m embeds in order m");
    if power.as_scalar().as_ref() != Some(&expected) {
        return Err(PseudoRepError::NotAPseudoRep(
            "σ(γ)ⁿ is not the scalar ζ(γ)⁻¹".into(),
        ));
    }
    let poly = sigma.images[gen].char_poly();
    let working = n * m;
    let mut exponents = Vec::with_capacity(r);
    for q in nth_root_exponents(n, &zeta) {
        let lambda = root_of_unity_rational(&q, working).expect("q has denominator dividing n·m");
        let mult = root_multiplicity(&poly, &lambda);
        exponents.extend(std::iter::repeat_n(q, mult));
    }
    if exponents.len() != r {
        return Err(PseudoRepError::EigenvalueExtraction {
            found: exponents.len(),
            size: r,
        });
    }
    sort_desc(&mut exponents);
    Ok(PseudoRepClass {
        order: n,
        zeta,
        exponents,
    })
}

/// Largest `n·r` accepted by [`enumerate_classes`].
pub const MAX_ENUMERATION: u64 = 24;

/// All classes of pseudorepresentations of ℤ/n in GL(r) or SL(r) with
/// `σ(γ)ⁿ = e^{2πi·zeta}`: multisets of size `r` of `n`-th roots of the
/// scalar, with determinant one for SL. Sorted lexicographically.
pub fn enumerate_classes(
    n: u64,
    r: usize,
    zeta: &Rational,
    model: MatrixModel,
) -> Result<Vec<PseudoRepClass>, PseudoRepError> {
    if n == 0 || r == 0 || n * r as u64 > MAX_ENUMERATION {
        return Err(PseudoRepError::ScaleExceeded(n * r as u64));
    }
    let zeta = normalize_weight(zeta, Convention::ResidueInZeroOne).into_value();
    let roots = nth_root_exponents(n, &zeta);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r);
    multisets(&roots, 0, r, &mut current, &mut |ms| {
        let mut exps = ms.to_vec();
        if model == MatrixModel::Sl {
            let sum = exps.iter().fold(Rational::zero(), |a, b| a + b);
            if !sum.is_integer() {
                return;
            }
        }
        sort_desc(&mut exps);
        out.push(PseudoRepClass {
            order: n,
            zeta: zeta.clone(),
            exponents: exps,
        });
    });
    out.sort();
    Ok(out)
}

fn multisets<T: Clone>(
    pool: &[T],
    start: usize,
    k: usize,
    cur: &mut Vec<T>,
    emit: &mut impl FnMut(&[T]),
) {
    if cur.len() == k {
        emit(cur);
        return;
    }
    for i in start..pool.len() {
        cur.push(pool[i].clone());
        multisets(pool, i, k, cur, emit);
        cur.pop();
    }
}

/// Result of transporting a pseudorepresentation along a deck transformation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transported {
    pub pseudorep: PseudoRep,
    /// Generator `γ₀ γ γ₀⁻¹` of the target isotropy group, in the ambient group.
    pub generator: usize,
}

/// `σ′(γ′) = σ(γ₀⁻¹ γ′ γ₀)` on the isotropy group of `γ₀·x`.
///
/// `generator` is the image in `ambient` of the canonical generator of the
/// isotropy group of `x`.
pub fn deck_transport(
    sigma: &PseudoRep,
    generator: usize,
    gamma0: usize,
    ambient: &FiniteAbelianGroup,
) -> Result<Transported, PseudoRepError> {
    if generator >= ambient.order() || gamma0 >= ambient.order() {
        return Err(PseudoRepError::IsotropyMismatch(
            "element outside the ambient group".into(),
        ));
    }
    if ambient.element_order(generator) != sigma.order {
        return Err(PseudoRepError::IsotropyMismatch(format!(
            "generator has order {} but σ is defined on ℤ/{}",
            ambient.element_order(generator),
            sigma.order
        )));
    }
    let inv0 = ambient.inverse(gamma0);
    let target_gen = ambient.op(ambient.op(gamma0, generator), inv0);
    // index of γ₀⁻¹ (γ′)^j γ₀ as a power of the source generator
    let source_powers: Vec<usize> = (0..sigma.order as usize)
        .map(|j| ambient.power(generator, j as u64))
        .collect();
    let mut images = Vec::with_capacity(sigma.order as usize);
    for j in 0..sigma.order {
        let gamma_prime = ambient.power(target_gen, j);
        let pulled = ambient.op(ambient.op(inv0, gamma_prime), gamma0);
        let idx = source_powers
            .iter()
            .position(|&p| p == pulled)
            .ok_or_else(|| {
                PseudoRepError::IsotropyMismatch("conjugate leaves the isotropy group".into())
            })?;
        images.push(sigma.images[idx].clone());
    }
    Ok(Transported {
        pseudorep: PseudoRep::new(sigma.order, sigma.cocycle.clone(), images)?,
        generator: target_gen,
    })
}

/// A class of homomorphisms ℤ/n → G/Z′ where Z′ = μ_m acts by scalars.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuotientClass {
    pub order: u64,
    pub center_order: u64,
    /// Exponent blocks after the canonical common shift; one block for GL/SL.
    pub exponents: Vec<Vec<Rational>>,
}

/// Canonical form of exponent blocks modulo a simultaneous shift by `k/m`:
/// the lexicographically least shifted configuration.
pub fn canonical_shift(blocks: &[Vec<Rational>], center_order: u64) -> Vec<Vec<Rational>> {
    (0..center_order.max(1) as i64)
        .map(|k| {
            let shift = Rational::new(k, center_order.max(1) as i64);
            blocks
                .iter()
                .map(|b| {
                    let mut v: Vec<Rational> = b
                        .iter()
                        .map(|q| {
                            normalize_weight(&(q + &shift), Convention::ResidueInZeroOne)
                                .into_value()
                        })
                        .collect();
                    sort_desc(&mut v);
                    v
                })
                .collect::<Vec<_>>()
        })
        .min()
        .expect("at least one shift")
}

/// Image of a class in R(Γ_x, G/Z′).
pub fn project_mod_center(cls: &PseudoRepClass, center_order: u64) -> QuotientClass {
    QuotientClass {
        order: cls.order,
        center_order,
        exponents: canonical_shift(std::slice::from_ref(&cls.exponents), center_order),
    }
}

/// Composes a cocycle with ρ|_{Z′}: ℤ/m → ℤ/m′, `1 ↦ generator_image`.
pub fn induced_cocycle(
    c: &Cochain2,
    target_order: u64,
    generator_image: u64,
) -> Result<Cochain2, PseudoRepError> {
    let m = c.coeff_order();
    if target_order == 0 || !(m * generator_image).is_multiple_of(target_order) {
        return Err(PseudoRepError::NotAHomomorphism {
            from: m,
            to: target_order,
        });
    }
    let table = c
        .table()
        .iter()
        .map(|&k| (k * generator_image) % target_order)
        .collect();
    Ok(Cochain2::new(c.group().clone(), target_order, table)?)
}

/// Order of the root of unity `e^{2πiq}`.
pub fn root_order(q: &Rational) -> u64 {
    q.denom_u64()
}

/// lcm of the cyclotomic orders of all matrix entries.
pub fn working_order(matrices: &[CyclotomicMatrix]) -> u64 {
    matrices.iter().fold(1u64, |acc, m| {
        (0..m.size())
            .flat_map(|i| (0..m.size()).map(move |j| (i, j)))
            .fold(acc, |a, (i, j)| a.lcm(&m.get(i, j).order()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn z2_minus_one() -> Cochain2 {
        Cochain2::from_fn(FiniteAbelianGroup::cyclic(2), 2, |a, b| {
            (a == 1 && b == 1) as u64
        })
        .unwrap()
    }

    fn diag_roots(exps: &[(i64, u64)]) -> CyclotomicMatrix {
        CyclotomicMatrix::diagonal(
            exps.iter()
                .map(|&(k, m)| Cyclotomic::zeta_power(k, m))
                .collect(),
        )
    }

    #[test]
    fn verify_examples() {
        let triv = Cochain2::trivial(FiniteAbelianGroup::cyclic(3), 1);
        let id = PseudoRep::new(3, triv, vec![CyclotomicMatrix::identity(2); 3]).unwrap();
        assert_eq!(verify_pseudorep(&id), PseudoRepCheck::Valid);

        // diag(i, -i) with c(γ,γ) = -1
        let s = diag_roots(&[(1, 4), (3, 4)]);
        let sigma = PseudoRep::new(
            2,
            z2_minus_one(),
            vec![CyclotomicMatrix::identity(2), s.clone()],
        )
        .unwrap();
        assert_eq!(verify_pseudorep(&sigma), PseudoRepCheck::Valid);

        let bad = PseudoRep::new(
            2,
            Cochain2::trivial(FiniteAbelianGroup::cyclic(2), 1),
            vec![CyclotomicMatrix::identity(2), diag_roots(&[(1, 4), (0, 1)])],
        )
        .unwrap();
        assert_eq!(
            verify_pseudorep(&bad),
            PseudoRepCheck::RelationFails { pair: (1, 1) }
        );
    }

    #[test]
    fn size_mismatch_rejected() {
        let triv = Cochain2::trivial(FiniteAbelianGroup::cyclic(2), 1);
        let err = PseudoRep::new(
            2,
            triv,
            vec![CyclotomicMatrix::identity(2), CyclotomicMatrix::identity(3)],
        );
        assert_eq!(err, Err(PseudoRepError::SizeMismatch));
    }

    #[test]
    fn classify_examples() {
        let triv2 = Cochain2::trivial(FiniteAbelianGroup::cyclic(2), 1);
        let id = PseudoRep::new(2, triv2, vec![CyclotomicMatrix::identity(2); 2]).unwrap();
        assert_eq!(classify(&id).unwrap().exponents, vec![q(0, 1), q(0, 1)]);

        let triv3 = Cochain2::trivial(FiniteAbelianGroup::cyclic(3), 1);
        let s = PseudoRep::from_generator(triv3, diag_roots(&[(1, 3), (2, 3)])).unwrap();
        assert_eq!(classify(&s).unwrap().exponents, vec![q(2, 3), q(1, 3)]);

        let s = PseudoRep::from_generator(z2_minus_one(), diag_roots(&[(1, 4), (3, 4)])).unwrap();
        let cls = classify(&s).unwrap();
        assert_eq!(cls.exponents, vec![q(3, 4), q(1, 4)]);
        assert_eq!(cls.zeta, q(1, 2));
    }

    #[test]
    fn classify_rejects_non_pseudorep() {
        let triv = Cochain2::trivial(FiniteAbelianGroup::cyclic(2), 1);
        let bad = PseudoRep::new(
            2,
            triv,
            vec![CyclotomicMatrix::identity(1), diag_roots(&[(1, 4)])],
        )
        .unwrap();
        assert!(matches!(
            classify(&bad),
            Err(PseudoRepError::NotAPseudoRep(_))
        ));
    }

    #[test]
    fn classify_is_conjugation_invariant() {
        let c = Cochain2::cyclic_standard(3, 3, 1);
        let s = PseudoRep::from_generator(c, diag_roots(&[(2, 9), (5, 9), (5, 9)])).unwrap();
        assert_eq!(verify_pseudorep(&s), PseudoRepCheck::Valid);
        let g = CyclotomicMatrix::from_rows(vec![
            vec![
                Cyclotomic::from_int(1),
                Cyclotomic::zeta_power(1, 3),
                Cyclotomic::from_int(0),
            ],
            vec![
                Cyclotomic::from_int(0),
                Cyclotomic::from_int(1),
                Cyclotomic::from_int(2),
            ],
            vec![
                Cyclotomic::from_int(1),
                Cyclotomic::from_int(0),
                Cyclotomic::from_int(1),
            ],
        ])
        .unwrap();
        let conj = s.conjugate(&g).unwrap();
        assert_eq!(verify_pseudorep(&conj), PseudoRepCheck::Valid);
        assert_eq!(classify(&conj).unwrap(), classify(&s).unwrap());
    }

    #[test]
    fn enumerate_examples() {
        let gl = MatrixModel::Gl;
        assert_eq!(enumerate_classes(3, 2, &q(0, 1), gl).unwrap().len(), 6);
        let two = enumerate_classes(2, 1, &q(0, 1), gl).unwrap();
        let exps: Vec<_> = two.iter().map(|c| c.exponents.clone()).collect();
        assert_eq!(exps, vec![vec![q(0, 1)], vec![q(1, 2)]]);
        let twisted = enumerate_classes(3, 2, &q(1, 3), gl).unwrap();
        assert_eq!(twisted.len(), 6);
        let allowed = [q(1, 9), q(4, 9), q(7, 9)];
        assert!(twisted
            .iter()
            .flat_map(|c| &c.exponents)
            .all(|e| allowed.contains(e)));
        // SL(2), ℤ/2, ζ = 1: {0,0} and {1/2,1/2}
        assert_eq!(
            enumerate_classes(2, 2, &q(0, 1), MatrixModel::Sl)
                .unwrap()
                .len(),
            2
        );
        assert!(matches!(
            enumerate_classes(5, 5, &q(0, 1), gl),
            Err(PseudoRepError::ScaleExceeded(25))
        ));
    }

    #[test]
    fn transport_examples() {
        let z6 = FiniteAbelianGroup::cyclic(6);
        let c = Cochain2::cyclic_standard(3, 2, 1);
        let sigma = PseudoRep::from_generator(c, diag_roots(&[(1, 6), (1, 2)])).unwrap();
        // isotropy ℤ/3 = ⟨2⟩ in ℤ/6
        let t = deck_transport(&sigma, 2, 0, &z6).unwrap();
        assert_eq!(t.pseudorep, sigma);
        for g0 in 0..6 {
            let t = deck_transport(&sigma, 2, g0, &z6).unwrap();
            assert_eq!(t.pseudorep, sigma);
            let back = deck_transport(&t.pseudorep, t.generator, z6.inverse(g0), &z6).unwrap();
            assert_eq!(back.pseudorep, sigma);
            assert_eq!(back.generator, 2);
        }
        assert!(matches!(
            deck_transport(&sigma, 1, 0, &z6),
            Err(PseudoRepError::IsotropyMismatch(_))
        ));
    }

    #[test]
    fn projection_examples() {
        let cls = |e: Vec<Rational>| PseudoRepClass {
            order: 2,
            zeta: q(0, 1),
            exponents: e,
        };
        let a = project_mod_center(&cls(vec![q(0, 1), q(0, 1)]), 2);
        let b = project_mod_center(&cls(vec![q(1, 2), q(1, 2)]), 2);
        assert_eq!(a, b);
        let x = cls(vec![q(1, 2), q(0, 1)]);
        assert_eq!(
            project_mod_center(&x, 1).exponents,
            vec![x.exponents.clone()]
        );
        let y = cls(vec![q(3, 4), q(1, 4)]);
        assert_eq!(
            project_mod_center(&y, 2).exponents,
            vec![vec![q(3, 4), q(1, 4)]]
        );
    }

    #[test]
    fn induced_cocycle_examples() {
        let g = FiniteAbelianGroup::cyclic(2);
        let c = Cochain2::from_fn(g.clone(), 4, |a, b| (a == 1 && b == 1) as u64).unwrap();
        assert_eq!(
            induced_cocycle(&c, 1, 0).unwrap(),
            Cochain2::trivial(g.clone(), 1)
        );
        assert_eq!(induced_cocycle(&c, 4, 1).unwrap(), c);
        // ρ(z) = z² sends i to -1
        let sq = induced_cocycle(&c, 4, 2).unwrap();
        assert_eq!(sq.get(1, 1), 2);
        assert!(matches!(
            induced_cocycle(&c, 3, 1),
            Err(PseudoRepError::NotAHomomorphism { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let s = PseudoRep::from_generator(z2_minus_one(), diag_roots(&[(1, 4), (3, 4)])).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        let back: PseudoRep = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        let cls = classify(&s).unwrap();
        let text = serde_json::to_string(&cls).unwrap();
        assert_eq!(
            text,
            r#"{"order":2,"zeta":"1/2","exponents":["3/4","1/4"]}"#
        );
    }
}
