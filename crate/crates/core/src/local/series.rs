use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::LocalError;
use crate::lie::{check_alcove_form, isotropy_eigenspaces, GroupModel};
use crate::pseudorep::CyclotomicMatrix;
use crate::scalars::{normalize_weight, Convention, Cyclotomic, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variable {
    /// `f(z) dz` on the cover; exponents `k ≥ 0`.
    #[serde(rename = "z")]
    Upstairs,
    /// `f′(w) dw` downstairs; exponents `k ≥ -1`.
    #[serde(rename = "w")]
    Downstairs,
}

impl Variable {
    pub fn min_exponent(self) -> i64 {
        match self {
            Variable::Upstairs => 0,
            Variable::Downstairs => -1,
        }
    }
}

/// One monomial `coeff · E_ij · x^k dx`, with 1-based `basis = [i, j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub basis: [usize; 2],
    pub k: i64,
    pub coeff: Cyclotomic,
}

/// A truncated Laurent series with values in 𝔪^ℂ, graded by the eigenvalues
/// of `Ad(e^{2πiα})`.
///
/// All exponents up to `trunc` are known (absent ones are zero); exponents
/// beyond `trunc` are unknown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSeries", into = "RawSeries")]
pub struct GradedSeries {
    model: GroupModel,
    alpha: Vec<Rational>,
    n: u64,
    variable: Variable,
    trunc: i64,
    terms: BTreeMap<(usize, usize, i64), Cyclotomic>,
}

#[derive(Serialize, Deserialize)]
struct RawSeries {
    model: GroupModel,
    alpha: Vec<Rational>,
    #[serde(rename = "N")]
    n: u64,
    variable: Variable,
    trunc: i64,
    terms: Vec<Term>,
}

impl TryFrom<RawSeries> for GradedSeries {
    type Error = LocalError;
    fn try_from(raw: RawSeries) -> Result<Self, Self::Error> {
        GradedSeries::new(
            raw.model,
            raw.alpha,
            raw.n,
            raw.variable,
            raw.trunc,
            raw.terms,
        )
    }
}

impl From<GradedSeries> for RawSeries {
    fn from(s: GradedSeries) -> Self {
        let terms = s.terms().collect();
        RawSeries {
            model: s.model,
            alpha: s.alpha,
            n: s.n,
            variable: s.variable,
            trunc: s.trunc,
            terms,
        }
    }
}

impl GradedSeries {
    pub fn new(
        model: GroupModel,
        alpha: Vec<Rational>,
        n: u64,
        variable: Variable,
        trunc: i64,
        terms: Vec<Term>,
    ) -> Result<Self, LocalError> {
        let mut s = GradedSeries::zero(model, alpha, n, variable, trunc)?;
        let size = model.size();
        for t in terms {
            let [i, j] = t.basis;
            if i == 0 || j == 0 || i > size || j > size {
                return Err(LocalError::InvalidSeries(format!(
                    "basis [{i},{j}] outside {size}×{size}"
                )));
            }
            let (i, j) = (i - 1, j - 1);
            if !model.in_m(i, j) {
                return Err(LocalError::InvalidSeries(format!(
                    "basis [{},{}] is not in 𝔪",
                    i + 1,
                    j + 1
                )));
            }
            if t.k < variable.min_exponent() || t.k > trunc {
                return Err(LocalError::InvalidSeries(format!(
                    "exponent {} outside [{}, {trunc}]",
                    t.k,
                    variable.min_exponent()
                )));
            }
            if s.terms.contains_key(&(i, j, t.k)) {
                return Err(LocalError::InvalidSeries(format!(
                    "duplicate term [{},{}] k={}",
                    i + 1,
                    j + 1,
                    t.k
                )));
            }
            if !t.coeff.is_zero() {
                s.terms.insert((i, j, t.k), t.coeff.simplify());
            }
        }
        if model.is_traceless() {
            for k in s.exponents() {
                if !s.coefficient_matrix(k).trace().is_zero() {
                    return Err(LocalError::InvalidSeries(format!(
                        "coefficient of x^{k} is not traceless"
                    )));
                }
            }
        }
        Ok(s)
    }

    pub fn zero(
        model: GroupModel,
        alpha: Vec<Rational>,
        n: u64,
        variable: Variable,
        trunc: i64,
    ) -> Result<Self, LocalError> {
        let model = model.validate()?;
        check_alcove_form(model, &alpha)?;
        if n == 0 {
            return Err(LocalError::InvalidSeries("N must be positive".into()));
        }
        if trunc < variable.min_exponent() - 1 {
            return Err(LocalError::InvalidSeries(format!(
                "trunc {trunc} below the smallest exponent"
            )));
        }
        Ok(GradedSeries {
            model,
            alpha,
            n,
            variable,
            trunc,
            terms: BTreeMap::new(),
        })
    }

    pub fn model(&self) -> GroupModel {
        self.model
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn variable(&self) -> Variable {
        self.variable
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in (row, column, exponent) order, with 1-based indices.
    pub fn terms(&self) -> impl Iterator<Item = Term> + '_ {
        self.terms.iter().map(|(&(i, j, k), c)| Term {
            basis: [i + 1, j + 1],
            k,
            coeff: c.clone(),
        })
    }

    /// Raw access with 0-based indices.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, i64), &Cyclotomic)> {
        self.terms.iter().map(|(&key, c)| (key, c))
    }

    /// Coefficient of `E_ij x^k` with 0-based indices.
    pub fn coefficient(&self, i: usize, j: usize, k: i64) -> Cyclotomic {
        self.terms
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(Cyclotomic::zero)
    }

    /// β of the matrix unit `E_ij` (0-based): `α_i − α_j` in the signed
    /// convention.
    pub fn beta(&self, i: usize, j: usize) -> Rational {
        beta_of(&self.alpha, i, j)
    }

    /// All β occurring on 𝔪^ℂ, ascending.
    pub fn betas(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self
            .model
            .m_mask()
            .entries()
            .into_iter()
            .map(|(i, j)| self.beta(i, j))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn exponents(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.terms.keys().map(|&(_, _, k)| k).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn coefficient_matrix(&self, k: i64) -> CyclotomicMatrix {
        let n = self.model.size();
        let mut m = CyclotomicMatrix::zero(n);
        for (&(i, j, kk), c) in &self.terms {
            if kk == k {
                m.set(i, j, c.clone());
            }
        }
        m
    }

    /// Same frame, no terms.
    pub fn empty_like(&self, variable: Variable, trunc: i64) -> Self {
        GradedSeries {
            model: self.model,
            alpha: self.alpha.clone(),
            n: self.n,
            variable,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn insert(&mut self, i: usize, j: usize, k: i64, c: Cyclotomic) {
        debug_assert!(k <= self.trunc && k >= self.variable.min_exponent());
        if c.is_zero() {
            self.terms.remove(&(i, j, k));
        } else {
            self.terms.insert((i, j, k), c.simplify());
        }
    }

    fn same_frame(&self, other: &Self) -> bool {
        self.model == other.model
            && self.alpha == other.alpha
            && self.n == other.n
            && self.variable == other.variable
    }

    /// Sum of two series in the same frame; valid through the smaller
    /// truncation.
    pub fn add(&self, other: &Self) -> Result<Self, LocalError> {
        if !self.same_frame(other) {
            return Err(LocalError::InvalidSeries(
                "series live in different frames".into(),
            ));
        }
        let mut out = self.truncated(self.trunc.min(other.trunc));
        for (&(i, j, k), c) in &other.terms {
            if k <= out.trunc {
                let v = &out.coefficient(i, j, k) + c;
                out.insert(i, j, k, v);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        let mut out = self.empty_like(self.variable, self.trunc);
        for (&(i, j, k), c) in &self.terms {
            out.insert(i, j, k, c * s);
        }
        out
    }

    /// Forgets everything above exponent `t` (no-op when `t ≥ trunc`).
    pub fn truncated(&self, t: i64) -> Self {
        let trunc = self.trunc.min(t);
        let mut out = self.empty_like(self.variable, trunc);
        out.terms = self
            .terms
            .iter()
            .filter(|(key, _)| key.2 <= trunc)
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        out
    }

    /// Equality on all exponents both series know.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let t = self.trunc.min(other.trunc);
        self.same_frame(other) && self.truncated(t).terms == other.truncated(t).terms
    }
}

pub(crate) fn beta_of(alpha: &[Rational], i: usize, j: usize) -> Rational {
    normalize_weight(&(&alpha[i] - &alpha[j]), Convention::SignedRepresentative).into_value()
}

/// Splits a series into its components on the β-eigenspaces of 𝔪^ℂ.
///
/// Every β of the decomposition appears, possibly with an empty component,
/// in ascending order.
pub fn decompose_by_beta(
    series: &GradedSeries,
) -> Result<Vec<(Rational, GradedSeries)>, LocalError> {
    let alpha = check_alcove_form(series.model, &series.alpha)?;
    let spaces = isotropy_eigenspaces(&alpha)?;
    Ok(spaces
        .into_iter()
        .map(|space| {
            let mut part = series.empty_like(series.variable, series.trunc);
            part.terms = series
                .terms
                .iter()
                .filter(|(&(i, j, _), _)| space.mask.get(i, j))
                .map(|(k, c)| (*k, c.clone()))
                .collect();
            (space.beta, part)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn term(i: usize, j: usize, k: i64, c: i64) -> Term {
        Term {
            basis: [i, j],
            k,
            coeff: Cyclotomic::from_int(c),
        }
    }

    fn gl2_third(terms: Vec<Term>) -> GradedSeries {
        GradedSeries::new(
            GroupModel::ComplexGl(2),
            vec![q(1, 3), q(0, 1)],
            3,
            Variable::Upstairs,
            4,
            terms,
        )
        .unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let id = gl2_third(vec![term(1, 1, 0, 1), term(2, 2, 0, 1)]);
        let parts = decompose_by_beta(&id).unwrap();
        for (beta, part) in &parts {
            assert_eq!(part.is_zero(), !beta.is_zero());
        }

        let e12 = gl2_third(vec![term(1, 2, 1, 1)]);
        let parts = decompose_by_beta(&e12).unwrap();
        let nonzero: Vec<&Rational> = parts
            .iter()
            .filter(|p| !p.1.is_zero())
            .map(|p| &p.0)
            .collect();
        assert_eq!(nonzero, vec![&q(1, 3)]);

        let mixed = gl2_third(vec![term(1, 2, 0, 1), term(2, 1, 0, 1)]);
        let parts = decompose_by_beta(&mixed).unwrap();
        let sum = parts
            .iter()
            .skip(1)
            .fold(parts[0].1.clone(), |acc, p| acc.add(&p.1).unwrap());
        assert_eq!(sum, mixed);
        assert_eq!(parts.iter().filter(|p| !p.1.is_zero()).count(), 2);
    }

    #[test]
    fn validation() {
        let gl2 = GroupModel::ComplexGl(2);
        let a = vec![q(1, 2), q(0, 1)];
        assert!(GradedSeries::new(
            gl2,
            a.clone(),
            2,
            Variable::Upstairs,
            3,
            vec![term(1, 2, -1, 1)]
        )
        .is_err());
        assert!(GradedSeries::new(
            gl2,
            a.clone(),
            2,
            Variable::Downstairs,
            3,
            vec![term(1, 2, -1, 1)]
        )
        .is_ok());
        assert!(GradedSeries::new(
            gl2,
            a.clone(),
            2,
            Variable::Upstairs,
            3,
            vec![term(1, 2, 4, 1)]
        )
        .is_err());
        assert!(GradedSeries::new(
            gl2,
            a.clone(),
            2,
            Variable::Upstairs,
            3,
            vec![term(3, 1, 0, 1)]
        )
        .is_err());
        assert!(GradedSeries::new(
            gl2,
            vec![q(0, 1), q(1, 2)],
            2,
            Variable::Upstairs,
            3,
            vec![]
        )
        .is_err());
        let u11 = GroupModel::Upq(1, 1);
        assert!(GradedSeries::new(
            u11,
            a.clone(),
            2,
            Variable::Upstairs,
            3,
            vec![term(1, 1, 0, 1)]
        )
        .is_err());
        let sl2 = GroupModel::ComplexSl(2);
        let b = vec![q(1, 4), q(-1, 4)];
        assert!(GradedSeries::new(
            sl2,
            b.clone(),
            4,
            Variable::Upstairs,
            3,
            vec![term(1, 1, 0, 1)]
        )
        .is_err());
        assert!(GradedSeries::new(
            sl2,
            b,
            4,
            Variable::Upstairs,
            3,
            vec![term(1, 1, 0, 1), term(2, 2, 0, -1)]
        )
        .is_ok());
    }

    #[test]
    fn json_round_trip() {
        let s = gl2_third(vec![term(1, 2, 1, 1)]);
        let text = serde_json::to_string(&s).unwrap();
        assert!(text.contains(r#""N":3"#));
        assert!(text.contains(r#""basis":[1,2]"#));
        let back: GradedSeries = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        let short: GradedSeries = serde_json::from_str(
            r#"{"model":{"kind":"gl","r":2},"alpha":["1/3","0"],"N":3,"variable":"z","trunc":4,
                "terms":[{"basis":[1,2],"k":1,"coeff":"1"}]}"#,
        )
        .unwrap();
        assert_eq!(short, s);
    }
}
