use serde::{Deserialize, Serialize};

use super::{bracket_violation, GroupModel, LieError, Mask};
use crate::scalars::Rational;

/// Parabolic and Levi masks attached to a real diagonal `s ∈ i𝔥`.
///
/// Membership follows boundedness of `e^{ts} E_ij e^{-ts} = e^{t(s_i - s_j)} E_ij`
/// as `t → ∞`: `(i, j) ∈ 𝔭_s` iff `s_i ≤ s_j`, and `(i, j) ∈ 𝔩_s` iff
/// `s_i = s_j`. For descending `s` this gives lower triangular parabolics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicData {
    pub model: GroupModel,
    pub s: Vec<Rational>,
    pub p: Mask,
    pub l: Mask,
    pub m_s: Mask,
    pub m0_s: Mask,
}

/// Which closure property failed, with a witnessing pair of matrix units.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureFailure {
    pub property: &'static str,
    pub pair: Option<((usize, usize), (usize, usize))>,
}

pub fn parabolic_from_s(model: GroupModel, s: &[Rational]) -> Result<ParabolicData, LieError> {
    if s.len() != model.size() {
        return Err(LieError::NotInIH(format!(
            "expected {} diagonal entries, found {}",
            model.size(),
            s.len()
        )));
    }
    if model.is_traceless() {
        let tr = s.iter().fold(Rational::zero(), |a, x| &a + x);
        if !tr.is_zero() {
            return Err(LieError::NotInIH(format!("trace {tr} is not zero")));
        }
    }
    let n = model.size();
    let p = Mask::from_fn(n, |i, j| model.in_h(i, j) && s[i] <= s[j]);
    let l = Mask::from_fn(n, |i, j| model.in_h(i, j) && s[i] == s[j]);
    let m_s = Mask::from_fn(n, |i, j| model.in_m(i, j) && s[i] <= s[j]);
    let m0_s = Mask::from_fn(n, |i, j| model.in_m(i, j) && s[i] == s[j]);
    Ok(ParabolicData {
        model,
        s: s.to_vec(),
        p,
        l,
        m_s,
        m0_s,
    })
}

impl ParabolicData {
    /// Runs every structural check exhaustively on pairs of matrix units.
    pub fn verify(&self) -> Vec<ClosureFailure> {
        let neg: Vec<Rational> = self.s.iter().map(|x| -x).collect();
        let opposite = parabolic_from_s(self.model, &neg).expect("negation stays in i𝔥");
        let mut out = Vec::new();
        if self.l != self.p.intersect(&opposite.p) {
            out.push(ClosureFailure {
                property: "levi_is_intersection",
                pair: None,
            });
        }
        let checks = [
            ("p_closed", &self.p, &self.p, &self.p),
            ("p_preserves_m_s", &self.p, &self.m_s, &self.m_s),
            ("l_preserves_m0_s", &self.l, &self.m0_s, &self.m0_s),
        ];
        for (property, x, y, z) in checks {
            if let Some(pair) = bracket_violation(x, y, z) {
                out.push(ClosureFailure {
                    property,
                    pair: Some(pair),
                });
            }
        }
        out
    }

    pub fn dims(&self) -> [usize; 4] {
        let m = &self.model;
        [
            m.span_dimension(&self.p),
            m.span_dimension(&self.l),
            m.span_dimension(&self.m_s),
            m.span_dimension(&self.m0_s),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn zero_s_is_everything() {
        let d = parabolic_from_s(GroupModel::ComplexGl(3), &ints(&[0, 0, 0])).unwrap();
        assert_eq!(d.p.count(), 9);
        assert_eq!(d.l.count(), 9);
        assert!(d.verify().is_empty());
    }

    #[test]
    fn gl2_lower_triangular() {
        let d = parabolic_from_s(GroupModel::ComplexGl(2), &ints(&[1, 0])).unwrap();
        assert_eq!(
            Vec::<Vec<u8>>::from(d.p.clone()),
            vec![vec![1, 0], vec![1, 1]]
        );
        assert_eq!(
            Vec::<Vec<u8>>::from(d.l.clone()),
            vec![vec![1, 0], vec![0, 1]]
        );
        assert!(d.verify().is_empty());
    }

    #[test]
    fn gl3_block_levi() {
        let d = parabolic_from_s(GroupModel::ComplexGl(3), &ints(&[1, 1, 0])).unwrap();
        assert_eq!(
            Vec::<Vec<u8>>::from(d.l.clone()),
            vec![vec![1, 1, 0], vec![1, 1, 0], vec![0, 0, 1]]
        );
        assert_eq!(
            Vec::<Vec<u8>>::from(d.p.clone()),
            vec![vec![1, 1, 0], vec![1, 1, 0], vec![1, 1, 1]]
        );
    }

    #[test]
    fn upq_masks_split() {
        let d = parabolic_from_s(GroupModel::Upq(1, 1), &ints(&[1, 0])).unwrap();
        assert_eq!(
            Vec::<Vec<u8>>::from(d.p.clone()),
            vec![vec![1, 0], vec![0, 1]]
        );
        assert_eq!(
            Vec::<Vec<u8>>::from(d.m_s.clone()),
            vec![vec![0, 0], vec![1, 0]]
        );
        assert_eq!(d.m0_s.count(), 0);
        assert!(d.verify().is_empty());
    }

    #[test]
    fn sl_requires_trace_zero() {
        assert!(matches!(
            parabolic_from_s(GroupModel::ComplexSl(2), &ints(&[1, 0])),
            Err(LieError::NotInIH(_))
        ));
        let d = parabolic_from_s(GroupModel::ComplexSl(2), &ints(&[1, -1])).unwrap();
        assert_eq!(d.dims(), [2, 1, 2, 1]);
    }

    #[test]
    fn broken_mask_is_reported() {
        let mut d = parabolic_from_s(GroupModel::ComplexGl(3), &ints(&[2, 1, 0])).unwrap();
        d.p = Mask::from_fn(3, |i, j| i >= j && !(i == 2 && j == 0));
        let failures = d.verify();
        assert!(failures.iter().any(|f| f.property == "p_closed"));
    }
}
