use serde::{Deserialize, Serialize};

use super::{GroupModel, LieError, Mask};
use crate::pseudorep::CyclotomicMatrix;
use crate::scalars::{
    lcm_denominators, normalize_weight, root_of_unity, Convention, FractionalWeight, Rational,
};

/// Alcove representative of a finite-order torus element `e^{2πiα}`.
///
/// Entries are descending within each block of the model. GL and U(p,q)
/// entries lie in `[0, 1)`; SL entries are shifted to sum to zero and lie in
/// `(-1, 1)`. `shift` is the integer that was removed from the sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    pub model: GroupModel,
    pub entries: Vec<Rational>,
    #[serde(default)]
    pub shift: i64,
}

impl WeightVector {
    pub fn convention(&self) -> Convention {
        if self.model.is_traceless() {
            Convention::SignedRepresentative
        } else {
            Convention::ResidueInZeroOne
        }
    }

    pub fn weights(&self) -> Vec<FractionalWeight> {
        let conv = self.convention();
        self.entries
            .iter()
            .map(|e| FractionalWeight::new(e.clone(), conv).expect("alcove entries are in range"))
            .collect()
    }

    /// Strictly descending within each block with spread below 1.
    pub fn is_interior(&self) -> bool {
        self.model.blocks().into_iter().all(|b| {
            let block = &self.entries[b];
            let strict = block.windows(2).all(|w| w[0] > w[1]);
            let spread = match (block.first(), block.last()) {
                (Some(f), Some(l)) => f - l < Rational::one(),
                _ => true,
            };
            strict && spread
        })
    }

    /// Least common multiple of the entry denominators: the order of
    /// `e^{2πiα}` for GL and U(p,q).
    pub fn order(&self) -> u64 {
        lcm_denominators(&self.entries)
    }

    /// The diagonal matrix `e^{2πiα}` over ℚ(ζ_N) with `N` the order.
    pub fn exponential(&self) -> CyclotomicMatrix {
        let n = self.order();
        CyclotomicMatrix::diagonal(
            self.weights()
                .iter()
                .map(|w| root_of_unity(w, n).expect("order divides denominators"))
                .collect(),
        )
    }
}

/// Reduces a multiset of exponents to its alcove representative.
///
/// The conjugacy class of `diag(e^{2πi a_k})` depends only on the unordered
/// residues mod 1, so the representative sorts the residues in `[0, 1)`.
/// For SL(r) the residues sum to an integer `s` (the element has determinant
/// 1); subtracting 1 from the `s` largest residues gives the zero-sum
/// representative with spread at most 1.
pub fn alcove_normalize(
    model: GroupModel,
    exponents: &[Rational],
) -> Result<WeightVector, LieError> {
    if exponents.len() != model.size() {
        return Err(LieError::RankMismatch {
            expected: model.size(),
            found: exponents.len(),
        });
    }
    let mut entries: Vec<Rational> = exponents.iter().map(Rational::fract_floor).collect();
    sort_blocks(model, &mut entries);
    let mut shift = 0;
    if model.is_traceless() {
        let total = entries.iter().fold(Rational::zero(), |a, e| &a + e);
        if !total.is_integer() {
            return Err(LieError::NotSpecial(total.to_string()));
        }
        shift = total.to_i64().expect("small sum");
        for e in entries.iter_mut().take(shift as usize) {
            *e = &*e - &Rational::one();
        }
        sort_blocks(model, &mut entries);
    }
    Ok(WeightVector {
        model,
        entries,
        shift,
    })
}

fn sort_blocks(model: GroupModel, entries: &mut [Rational]) {
    for b in model.blocks() {
        entries[b].sort_by(|x, y| y.cmp(x));
    }
}

/// Checks that `entries` already is an alcove representative.
pub fn check_alcove_form(
    model: GroupModel,
    entries: &[Rational],
) -> Result<WeightVector, LieError> {
    let normal = alcove_normalize(model, entries)?;
    if normal.entries != entries {
        return Err(LieError::NotAlcoveForm(
            entries
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", "),
        ));
    }
    Ok(normal)
}

/// One β-eigenspace of `Ad(e^{2πiα})` on 𝔪^ℂ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenspace {
    pub beta: Rational,
    pub dim: usize,
    pub mask: Mask,
}

/// Decomposes 𝔪^ℂ under `Ad(e^{2πiα})`.
///
/// The matrix unit `E_ij` is an eigenvector with eigenvalue `e^{2πi(α_i−α_j)}`;
/// β is that difference in the signed convention. Each assignment is
/// confirmed by conjugating `E_ij` with the exact cyclotomic matrix
/// `e^{2πiα}`. Pieces are returned in increasing β.
pub fn isotropy_eigenspaces(alpha: &WeightVector) -> Result<Vec<Eigenspace>, LieError> {
    let model = alpha.model;
    check_alcove_form(model, &alpha.entries)?;
    let n = model.size();
    let order = alpha.order();
    let g = alpha.exponential();
    let g_inv = g
        .inverse()
        .map_err(|_| LieError::Inconsistent("singular torus element".into()))?;

    let mut pieces: Vec<(Rational, Vec<(usize, usize)>)> = Vec::new();
    for (i, j) in model.m_mask().entries() {
        let beta = normalize_weight(
            &(&alpha.entries[i] - &alpha.entries[j]),
            Convention::SignedRepresentative,
        );
        let e = CyclotomicMatrix::unit(n, i, j);
        let lhs = g.mul(&e).mul(&g_inv);
        let rhs = e.scale(&root_of_unity(&beta, order).expect("order divides β"));
        if lhs != rhs {
            return Err(LieError::Inconsistent(format!(
                "Ad fails on E_{}{}",
                i + 1,
                j + 1
            )));
        }
        let beta = beta.into_value();
        match pieces.iter_mut().find(|p| p.0 == beta) {
            Some(p) => p.1.push((i, j)),
            None => pieces.push((beta, vec![(i, j)])),
        }
    }
    pieces.sort_by(|a, b| a.0.cmp(&b.0));
    let spaces: Vec<Eigenspace> = pieces
        .into_iter()
        .map(|(beta, cells)| {
            let mask = Mask::from_fn(n, |i, j| cells.contains(&(i, j)));
            Eigenspace {
                beta,
                dim: model.span_dimension(&mask),
                mask,
            }
        })
        .collect();
    let total: usize = spaces.iter().map(|s| s.dim).sum();
    if total != model.dim_m() {
        return Err(LieError::Inconsistent(format!(
            "dimensions sum to {total}, expected {}",
            model.dim_m()
        )));
    }
    Ok(spaces)
}
