use std::fmt;

use serde::{Deserialize, Serialize};

use super::PseudoRepError;
use crate::scalars::{Cyclotomic, Rational};

pub const MAX_MATRIX_SIZE: usize = 4;

/// A square matrix over a cyclotomic field, of size at most 4.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Cyclotomic>>", into = "Vec<Vec<Cyclotomic>>")]
pub struct CyclotomicMatrix {
    size: usize,
    entries: Vec<Cyclotomic>,
}

impl CyclotomicMatrix {
    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Result<Self, PseudoRepError> {
        let size = rows.len();
        if size == 0 || size > MAX_MATRIX_SIZE {
            return Err(PseudoRepError::MatrixSize(size));
        }
        if rows.iter().any(|r| r.len() != size) {
            return Err(PseudoRepError::SizeMismatch);
        }
        Ok(CyclotomicMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zero(size: usize) -> Self {
        assert!(size > 0 && size <= MAX_MATRIX_SIZE);
        CyclotomicMatrix {
            size,
            entries: vec![Cyclotomic::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        Self::scalar(size, Cyclotomic::one())
    }

    pub fn scalar(size: usize, value: Cyclotomic) -> Self {
        let mut m = Self::zero(size);
        for i in 0..size {
            m.entries[i * size + i] = value.clone();
        }
        m
    }

    pub fn diagonal(values: Vec<Cyclotomic>) -> Self {
        let mut m = Self::zero(values.len());
        for (i, v) in values.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    /// Matrix unit E_{ij}.
    pub fn unit(size: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(size);
        m.set(i, j, Cyclotomic::one());
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclotomic) {
        self.entries[i * self.size + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Cyclotomic>> {
        self.entries.chunks(self.size).map(<[_]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Cyclotomic::is_zero)
    }

    /// The scalar `s` when the matrix equals `s·Id`.
    pub fn as_scalar(&self) -> Option<Cyclotomic> {
        let s = self.get(0, 0).clone();
        for i in 0..self.size {
            for j in 0..self.size {
                let expect_zero = i != j;
                let v = self.get(i, j);
                if (expect_zero && !v.is_zero()) || (!expect_zero && *v != s) {
                    return None;
                }
            }
        }
        Some(s)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        CyclotomicMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        CyclotomicMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Cyclotomic::zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        CyclotomicMatrix {
            size: self.size,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    pub fn scale_rational(&self, s: &Rational) -> Self {
        CyclotomicMatrix {
            size: self.size,
            entries: self.entries.iter().map(|a| a.scale(s)).collect(),
        }
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Self::identity(self.size);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Cyclotomic {
        (0..self.size).fold(Cyclotomic::zero(), |acc, i| &acc + self.get(i, i))
    }

    /// Commutator `[A, B] = AB - BA`.
    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Row echelon form by exact Gaussian elimination; returns the reduced
    /// matrix, the pivot count and the determinant sign/scale factor.
    fn eliminate(&self) -> (Vec<Vec<Cyclotomic>>, usize, Cyclotomic) {
        let n = self.size;
        let mut rows = self.rows();
        let mut det = Cyclotomic::one();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
                det = Cyclotomic::zero();
                continue;
            };
            if p != rank {
                rows.swap(p, rank);
                det = -det;
            }
            let pivot = rows[rank][col].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            let pivot_row = rows[rank].clone();
            for row in rows.iter_mut().skip(rank + 1) {
                if row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] * &inv;
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x = &*x - &(&factor * p);
                }
            }
            rank += 1;
        }
        (rows, rank, det)
    }

    pub fn determinant(&self) -> Cyclotomic {
        self.eliminate().2
    }

    pub fn rank(&self) -> usize {
        self.eliminate().1
    }

    pub fn inverse(&self) -> Result<Self, PseudoRepError> {
        let n = self.size;
        let mut a = self.rows();
        let mut inv = Self::identity(n).rows();
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(PseudoRepError::Singular)?;
            a.swap(p, col);
            inv.swap(p, col);
            let pinv = a[col][col].inv().expect("nonzero pivot");
            for c in 0..n {
                a[col][c] = &a[col][c] * &pinv;
                inv[col][c] = &inv[col][c] * &pinv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    let t = &f * &a[col][c];
                    a[r][c] = &a[r][c] - &t;
                    let t = &f * &inv[col][c];
                    inv[r][c] = &inv[r][c] - &t;
                }
            }
        }
        CyclotomicMatrix::from_rows(inv)
    }

    /// `g⁻¹ A g`.
    pub fn conjugate_by(&self, g: &Self) -> Result<Self, PseudoRepError> {
        Ok(g.inverse()?.mul(self).mul(g))
    }

    /// Characteristic polynomial `det(x·Id - A)`, constant term first, by
    /// the Faddeev–LeVerrier recursion.
    pub fn char_poly(&self) -> Vec<Cyclotomic> {
        let n = self.size;
        let mut coeffs = vec![Cyclotomic::zero(); n + 1];
        coeffs[n] = Cyclotomic::one();
        let mut m = Self::zero(n);
        for k in 1..=n {
            m = self
                .mul(&m)
                .add(&Self::scalar(n, coeffs[n - k + 1].clone()));
            let t = self.mul(&m).trace();
            coeffs[n - k] = (-t).scale(&Rational::new(1, k as i64));
        }
        coeffs
    }
}

/// Multiplicity of `root` as a root of `poly` (constant term first).
pub fn root_multiplicity(poly: &[Cyclotomic], root: &Cyclotomic) -> usize {
    let mut p = poly.to_vec();
    let mut mult = 0;
    while p.len() > 1 {
        // synthetic division by (x - root)
        let deg = p.len() - 1;
        let mut quot = vec![Cyclotomic::zero(); deg];
        let mut carry = Cyclotomic::zero();
        for i in (0..=deg).rev() {
            let v = &p[i] + &(&carry * root);
            if i == 0 {
                carry = v;
            } else {
                quot[i - 1] = v.clone();
                carry = v;
            }
        }
        if !carry.is_zero() {
            break;
        }
        mult += 1;
        p = quot;
    }
    mult
}

impl TryFrom<Vec<Vec<Cyclotomic>>> for CyclotomicMatrix {
    type Error = PseudoRepError;
    fn try_from(rows: Vec<Vec<Cyclotomic>>) -> Result<Self, Self::Error> {
        CyclotomicMatrix::from_rows(rows)
    }
}

impl From<CyclotomicMatrix> for Vec<Vec<Cyclotomic>> {
    fn from(m: CyclotomicMatrix) -> Self {
        m.rows()
    }
}

impl fmt::Debug for CyclotomicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from_int(n)
    }

    #[test]
    fn determinant_and_inverse() {
        let a = CyclotomicMatrix::from_rows(vec![vec![c(2), c(1)], vec![c(1), c(1)]]).unwrap();
        assert_eq!(a.determinant(), c(1));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), CyclotomicMatrix::identity(2));
        let sing = CyclotomicMatrix::from_rows(vec![vec![c(1), c(2)], vec![c(2), c(4)]]).unwrap();
        assert_eq!(sing.rank(), 1);
        assert!(sing.determinant().is_zero());
        assert_eq!(sing.inverse(), Err(PseudoRepError::Singular));
    }

    #[test]
    fn char_poly_of_diagonal() {
        let i = Cyclotomic::zeta_power(1, 4);
        let d = CyclotomicMatrix::diagonal(vec![i.clone(), -&i]);
        // (x - i)(x + i) = x² + 1
        assert_eq!(d.char_poly(), vec![c(1), c(0), c(1)]);
        assert_eq!(root_multiplicity(&d.char_poly(), &i), 1);
        assert_eq!(root_multiplicity(&d.char_poly(), &c(1)), 0);
        let id = CyclotomicMatrix::identity(3);
        assert_eq!(root_multiplicity(&id.char_poly(), &c(1)), 3);
    }

    #[test]
    fn sizes_checked() {
        assert_eq!(
            CyclotomicMatrix::from_rows(vec![vec![c(1)], vec![c(1), c(2)]]),
            Err(PseudoRepError::SizeMismatch)
        );
        assert_eq!(
            CyclotomicMatrix::from_rows(vec![vec![c(1); 5]; 5]),
            Err(PseudoRepError::MatrixSize(5))
        );
    }
}
