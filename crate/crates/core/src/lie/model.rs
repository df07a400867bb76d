use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::LieError;
use crate::pseudorep::MAX_MATRIX_SIZE;

/// Matrix model of the pair (H^ℂ, 𝔪^ℂ).
///
/// For the complex groups GL(r) and SL(r), H^ℂ is the group itself and
/// 𝔪^ℂ = 𝔥^ℂ is the full (resp. traceless) matrix algebra. For U(p,q),
/// 𝔥^ℂ = gl(p) ⊕ gl(q) is block diagonal and 𝔪^ℂ the off-diagonal blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawModel", into = "RawModel")]
pub enum GroupModel {
    ComplexGl(usize),
    ComplexSl(usize),
    Upq(usize, usize),
}

#[derive(Serialize, Deserialize)]
struct RawModel {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    q: Option<usize>,
}

impl TryFrom<RawModel> for GroupModel {
    type Error = LieError;
    fn try_from(raw: RawModel) -> Result<Self, Self::Error> {
        let bad = || {
            LieError::InvalidModel(format!(
                "kind {:?} r={:?} p={:?} q={:?}",
                raw.kind, raw.r, raw.p, raw.q
            ))
        };
        let model = match (raw.kind.as_str(), raw.r, raw.p, raw.q) {
            ("gl", Some(r), None, None) => GroupModel::ComplexGl(r),
            ("sl", Some(r), None, None) => GroupModel::ComplexSl(r),
            ("upq", None, Some(p), Some(q)) => GroupModel::Upq(p, q),
            _ => return Err(bad()),
        };
        model.validate()
    }
}

impl From<GroupModel> for RawModel {
    fn from(m: GroupModel) -> Self {
        let (kind, r, p, q) = match m {
            GroupModel::ComplexGl(r) => ("gl", Some(r), None, None),
            GroupModel::ComplexSl(r) => ("sl", Some(r), None, None),
            GroupModel::Upq(p, q) => ("upq", None, Some(p), Some(q)),
        };
        RawModel {
            kind: kind.into(),
            r,
            p,
            q,
        }
    }
}

impl GroupModel {
    pub fn validate(self) -> Result<Self, LieError> {
        let ok = match self {
            GroupModel::ComplexGl(r) => (1..=MAX_MATRIX_SIZE).contains(&r),
            GroupModel::ComplexSl(r) => (2..=MAX_MATRIX_SIZE).contains(&r),
            GroupModel::Upq(p, q) => p >= 1 && q >= 1 && p + q <= MAX_MATRIX_SIZE,
        };
        if ok {
            Ok(self)
        } else {
            Err(LieError::InvalidModel(format!("{self:?}")))
        }
    }

    /// Size of the ambient matrices.
    pub fn size(&self) -> usize {
        match *self {
            GroupModel::ComplexGl(r) | GroupModel::ComplexSl(r) => r,
            GroupModel::Upq(p, q) => p + q,
        }
    }

    pub fn is_traceless(&self) -> bool {
        matches!(self, GroupModel::ComplexSl(_))
    }

    /// Diagonal blocks of the maximal compact subgroup; alcove sorting is
    /// done within each block.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        match *self {
            GroupModel::ComplexGl(r) | GroupModel::ComplexSl(r) => std::iter::once(0..r).collect(),
            GroupModel::Upq(p, q) => vec![0..p, p..p + q],
        }
    }

    fn block_of(&self, i: usize) -> usize {
        self.blocks()
            .iter()
            .position(|b| b.contains(&i))
            .expect("index within model")
    }

    /// Entry `(i, j)` is used by 𝔥^ℂ.
    pub fn in_h(&self, i: usize, j: usize) -> bool {
        match self {
            GroupModel::Upq(..) => self.block_of(i) == self.block_of(j),
            _ => true,
        }
    }

    /// Entry `(i, j)` is used by 𝔪^ℂ.
    pub fn in_m(&self, i: usize, j: usize) -> bool {
        match self {
            GroupModel::Upq(..) => self.block_of(i) != self.block_of(j),
            _ => true,
        }
    }

    pub fn h_mask(&self) -> Mask {
        Mask::from_fn(self.size(), |i, j| self.in_h(i, j))
    }

    pub fn m_mask(&self) -> Mask {
        Mask::from_fn(self.size(), |i, j| self.in_m(i, j))
    }

    /// Complex dimension of the span of the entries of `mask`, accounting
    /// for the trace condition in SL(r).
    pub fn span_dimension(&self, mask: &Mask) -> usize {
        let count = mask.count();
        let diag = (0..self.size()).filter(|&i| mask.get(i, i)).count();
        if self.is_traceless() && diag == self.size() {
            count - 1
        } else {
            count
        }
    }

    pub fn dim_m(&self) -> usize {
        self.span_dimension(&self.m_mask())
    }

    pub fn dim_h(&self) -> usize {
        self.span_dimension(&self.h_mask())
    }

    pub fn label(&self) -> String {
        match *self {
            GroupModel::ComplexGl(r) => format!("GL({r})"),
            GroupModel::ComplexSl(r) => format!("SL({r})"),
            GroupModel::Upq(p, q) => format!("U({p},{q})"),
        }
    }
}

/// Boolean entry mask on n×n matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u8>>", into = "Vec<Vec<u8>>")]
pub struct Mask {
    size: usize,
    bits: Vec<bool>,
}

impl Mask {
    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        Mask {
            size,
            bits: (0..size * size).map(|k| f(k / size, k % size)).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.size + j]
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn entries(&self) -> Vec<(usize, usize)> {
        (0..self.size * self.size)
            .filter(|&k| self.bits[k])
            .map(|k| (k / self.size, k % self.size))
            .collect()
    }

    pub fn intersect(&self, other: &Mask) -> Mask {
        Mask::from_fn(self.size, |i, j| self.get(i, j) && other.get(i, j))
    }
}

impl TryFrom<Vec<Vec<u8>>> for Mask {
    type Error = LieError;
    fn try_from(rows: Vec<Vec<u8>>) -> Result<Self, Self::Error> {
        let size = rows.len();
        if rows
            .iter()
            .any(|r| r.len() != size || r.iter().any(|&b| b > 1))
        {
            return Err(LieError::InvalidModel(
                "mask must be a square 0/1 matrix".into(),
            ));
        }
        Ok(Mask {
            size,
            bits: rows.into_iter().flatten().map(|b| b == 1).collect(),
        })
    }
}

impl From<Mask> for Vec<Vec<u8>> {
    fn from(m: Mask) -> Self {
        m.bits
            .chunks(m.size)
            .map(|r| r.iter().map(|&b| b as u8).collect())
            .collect()
    }
}

/// `[E_ab, E_cd] = δ_bc E_ad − δ_da E_cb`, as signed matrix-unit terms.
pub fn unit_bracket((a, b): (usize, usize), (c, d): (usize, usize)) -> Vec<((usize, usize), i64)> {
    let mut terms: Vec<((usize, usize), i64)> = Vec::new();
    let mut push = |pos: (usize, usize), coeff: i64| {
        if let Some(t) = terms.iter_mut().find(|t| t.0 == pos) {
            t.1 += coeff;
        } else {
            terms.push((pos, coeff));
        }
    };
    if b == c {
        push((a, d), 1);
    }
    if d == a {
        push((c, b), -1);
    }
    terms.retain(|t| t.1 != 0);
    terms
}

/// Checks `[X, Y] ⊆ Z` on all pairs of matrix units from the masks; returns
/// the first pair whose bracket leaves `Z`.
pub fn bracket_violation(x: &Mask, y: &Mask, z: &Mask) -> Option<((usize, usize), (usize, usize))> {
    for ex in x.entries() {
        for ey in y.entries() {
            if unit_bracket(ex, ey).iter().any(|&((i, j), _)| !z.get(i, j)) {
                return Some((ex, ey));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(GroupModel::ComplexGl(3).dim_m(), 9);
        assert_eq!(GroupModel::ComplexSl(3).dim_m(), 8);
        assert_eq!(GroupModel::Upq(1, 2).dim_m(), 4);
        assert_eq!(GroupModel::Upq(1, 2).dim_h(), 5);
    }

    #[test]
    fn cartan_relations_for_upq() {
        for (p, q) in [(1, 1), (1, 2), (2, 2), (1, 3)] {
            let m = GroupModel::Upq(p, q);
            let (h, mm) = (m.h_mask(), m.m_mask());
            assert_eq!(bracket_violation(&mm, &mm, &h), None);
            assert_eq!(bracket_violation(&h, &mm, &mm), None);
            assert_eq!(bracket_violation(&h, &h, &h), None);
        }
    }

    #[test]
    fn json_forms() {
        let m: GroupModel = serde_json::from_str(r#"{"kind":"upq","p":1,"q":1}"#).unwrap();
        assert_eq!(m, GroupModel::Upq(1, 1));
        assert_eq!(
            serde_json::to_string(&GroupModel::ComplexGl(2)).unwrap(),
            r#"{"kind":"gl","r":2}"#
        );
        assert!(serde_json::from_str::<GroupModel>(r#"{"kind":"gl","p":1}"#).is_err());
        assert!(serde_json::from_str::<GroupModel>(r#"{"kind":"gl","r":5}"#).is_err());
    }

    #[test]
    fn unit_brackets() {
        assert_eq!(
            unit_bracket((0, 1), (1, 0)),
            vec![((0, 0), 1), ((1, 1), -1)]
        );
        assert!(unit_bracket((0, 0), (0, 0)).is_empty());
        assert!(unit_bracket((0, 1), (0, 1)).is_empty());
    }
}
