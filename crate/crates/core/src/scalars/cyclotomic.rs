use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{FractionalWeight, Rational, ScalarError};

/// Reduction data for ℚ(ζ_M) = ℚ[x]/(Φ_M).
#[derive(Debug)]
struct FieldData {
    order: u64,
    degree: usize,
    /// Reduced forms of x^k for 0 <= k < M, each of length `degree`.
    powers: Vec<Vec<BigInt>>,
}

static FIELDS: OnceLock<Mutex<HashMap<u64, Arc<FieldData>>>> = OnceLock::new();
static CYCLOTOMIC_POLYS: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();

/// Coefficients (constant term first) of the M-th cyclotomic polynomial,
/// obtained by dividing x^M - 1 by Φ_d for every proper divisor d of M.
pub fn cyclotomic_polynomial(m: u64) -> Vec<BigInt> {
    assert!(m >= 1);
    let cache = CYCLOTOMIC_POLYS.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.as_ref().clone();
    }
    let mut poly = vec![BigInt::zero(); m as usize + 1];
    poly[0] = BigInt::from(-1);
    poly[m as usize] = BigInt::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        poly = divide_monic(&poly, &cyclotomic_polynomial(d));
    }
    cache.lock().unwrap().insert(m, Arc::new(poly.clone()));
    poly
}

/// Exact quotient of integer polynomials; `divisor` is monic.
fn divide_monic(dividend: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    let dd = divisor.len() - 1;
    let mut rem = dividend.to_vec();
    let qlen = rem.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let lead = rem[i + dd].clone();
        if lead.is_zero() {
            continue;
        }
        for (j, dj) in divisor.iter().enumerate() {
            rem[i + j] -= &lead * dj;
        }
        quot[i] = lead;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

pub fn euler_phi(m: u64) -> u64 {
    (1..=m).filter(|k| k.gcd(&m) == 1).count() as u64
}

fn field(m: u64) -> Arc<FieldData> {
    let cache = FIELDS.get_or_init(Default::default);
    if let Some(f) = cache.lock().unwrap().get(&m) {
        return f.clone();
    }
    let phi = cyclotomic_polynomial(m);
    let degree = phi.len() - 1;
    let mut powers = Vec::with_capacity(m as usize);
    let mut cur = vec![BigInt::zero(); degree];
    cur[0] = BigInt::one();
    for _ in 0..m {
        powers.push(cur.clone());
        // multiply by x, then eliminate x^degree using Φ_M
        let top = cur[degree - 1].clone();
        for j in (1..degree).rev() {
            cur[j] = cur[j - 1].clone();
        }
        cur[0] = BigInt::zero();
        if !top.is_zero() {
            for (j, c) in cur.iter_mut().enumerate() {
                *c -= &top * &phi[j];
            }
        }
    }
    let data = Arc::new(FieldData {
        order: m,
        degree,
        powers,
    });
    cache.lock().unwrap().insert(m, data.clone());
    data
}

/// An element of the cyclotomic field ℚ(ζ_M), stored as its reduced
/// coordinates in the power basis 1, ζ_M, …, ζ_M^{φ(M)-1}.
///
/// Elements of different orders compare equal when their images in the
/// common field ℚ(ζ_lcm) agree; arithmetic promotes to the lcm order.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "RawCyclotomic")]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational>,
}

/// Accepted input forms: `{"order": M, "coeffs": [...]}` or a bare rational
/// string such as `"1/2"`.
#[derive(Deserialize)]
#[serde(untagged)]
enum RawCyclotomic {
    Field { order: u64, coeffs: Vec<Rational> },
    Rational(Rational),
}

impl TryFrom<RawCyclotomic> for Cyclotomic {
    type Error = ScalarError;

    fn try_from(raw: RawCyclotomic) -> Result<Self, Self::Error> {
        match raw {
            RawCyclotomic::Field { order, coeffs } => Cyclotomic::from_coeffs(order, coeffs),
            RawCyclotomic::Rational(q) => Ok(Cyclotomic::from_rational(q, 1)),
        }
    }
}

impl Cyclotomic {
    pub fn from_coeffs(order: u64, coeffs: Vec<Rational>) -> Result<Self, ScalarError> {
        if order == 0 {
            return Err(ScalarError::ZeroOrder);
        }
        let degree = field(order).degree;
        if coeffs.len() != degree {
            return Err(ScalarError::CoefficientCount {
                order,
                expected: degree,
                found: coeffs.len(),
            });
        }
        Ok(Cyclotomic { order, coeffs })
    }

    pub fn from_rational(value: Rational, order: u64) -> Self {
        let f = field(order);
        let mut coeffs = vec![Rational::zero(); f.degree];
        coeffs[0] = value;
        Cyclotomic { order, coeffs }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n), 1)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// ζ_M^k, for any integer k.
    pub fn zeta_power(k: i64, order: u64) -> Self {
        let f = field(order);
        let k = k.rem_euclid(order as i64) as usize;
        let coeffs = f.powers[k]
            .iter()
            .map(|c| Rational::from(c.clone()))
            .collect();
        Cyclotomic { order, coeffs }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The rational value, when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Image under ℚ(ζ_M) ↪ ℚ(ζ_M'), sending ζ_M to ζ_M'^{M'/M}.
    pub fn embed(&self, target: u64) -> Result<Self, ScalarError> {
        if target == 0 || !target.is_multiple_of(self.order) {
            return Err(ScalarError::IncompatibleOrders {
                from: self.order,
                to: target,
            });
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let f = field(target);
        let step = (target / self.order) as usize;
        let mut out = vec![Rational::zero(); f.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            accumulate(&mut out, c, &f.powers[(i * step) % target as usize]);
        }
        Ok(Cyclotomic {
            order: target,
            coeffs: out,
        })
    }

    fn promote(&self, other: &Self) -> (Self, Self) {
        let m = self.order.lcm(&other.order);
        (
            self.embed(m).expect("lcm is a common multiple"),
            other.embed(m).expect("lcm is a common multiple"),
        )
    }

    /// Drops to order 1 when the value is rational, so printed forms do not
    /// depend on the field a computation passed through.
    pub fn simplify(self) -> Self {
        match self.as_rational() {
            Some(q) => Cyclotomic::from_rational(q, 1),
            None => self,
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, exp: i64) -> Result<Self, ScalarError> {
        let mut base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Cyclotomic::from_rational(Rational::one(), self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative inverse, via the extended Euclidean algorithm
    /// against Φ_M in ℚ[x].
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.order)
            .into_iter()
            .map(Rational::from)
            .collect();
        let inverse = poly_inverse_mod(&self.coeffs, &modulus);
        let mut coeffs = vec![Rational::zero(); self.coeffs.len()];
        for (i, c) in inverse.into_iter().enumerate() {
            coeffs[i] = c;
        }
        Ok(Cyclotomic {
            order: self.order,
            coeffs,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }
}

fn accumulate(out: &mut [Rational], scale: &Rational, power: &[BigInt]) {
    for (o, p) in out.iter_mut().zip(power) {
        if !p.is_zero() {
            *o += &(scale * &Rational::from(p.clone()));
        }
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
}

fn poly_sub_mul(a: &[Rational], q: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut prod = vec![Rational::zero(); q.len() + b.len() - 1];
    for (i, x) in q.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            prod[i + j] += &(x * y);
        }
    }
    let n = a.len().max(prod.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = prod.get(i).cloned().unwrap_or_default();
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    if rem.len() < b.len() {
        return (vec![Rational::zero()], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            rem[i + j] -= &t;
        }
        quot[i] = c;
    }
    rem.truncate(db.max(1));
    trim(&mut rem);
    (quot, rem)
}

fn poly_inverse_mod(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
    // invariant: s * a ≡ r (mod m)
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut s0 = vec![Rational::zero()];
    let mut s1 = vec![Rational::one()];
    while r1.len() > 1 {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub_mul(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r1 is a nonzero constant since gcd(a, Φ_M) = 1 for a ≠ 0
    let c = r1[0].inv().expect("element is invertible");
    let (_, s) = poly_divmod(&s1, m);
    s.into_iter().map(|x| x * &c).collect()
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.promote(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c:?}")?,
                _ => write!(f, "{c:?}·ζ{}^{i}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.promote(rhs);
        Cyclotomic {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.promote(rhs);
        Cyclotomic {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Mul<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.promote(rhs);
        let f = field(a.order);
        let mut out = vec![Rational::zero(); f.degree];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                accumulate(&mut out, &(x * y), &f.powers[(i + j) % f.order as usize]);
            }
        }
        Cyclotomic {
            order: a.order,
            coeffs: out,
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// `e^{2πi q}` as an element of ℚ(ζ_M); requires `M q ∈ ℤ`.
pub fn root_of_unity(q: &FractionalWeight, order: u64) -> Result<Cyclotomic, ScalarError> {
    root_of_unity_rational(q.value(), order)
}

pub fn root_of_unity_rational(q: &Rational, order: u64) -> Result<Cyclotomic, ScalarError> {
    if order == 0 {
        return Err(ScalarError::ZeroOrder);
    }
    let scaled = q * &Rational::from_int(order as i64);
    let k = scaled
        .to_i64()
        .ok_or_else(|| ScalarError::DenominatorNotDividing {
            value: q.to_string(),
            order,
        })?;
    Ok(Cyclotomic::zeta_power(k, order))
}

/// Embedding into a larger cyclotomic field; see [`Cyclotomic::embed`].
pub fn cyclotomic_embed(c: &Cyclotomic, target: u64) -> Result<Cyclotomic, ScalarError> {
    c.embed(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{normalize_weight, Convention};

    fn w(n: i64, d: i64) -> FractionalWeight {
        normalize_weight(&Rational::new(n, d), Convention::ResidueInZeroOne)
    }

    /// Multiplicative order by repeated multiplication.
    fn brute_order(c: &Cyclotomic) -> u64 {
        let mut acc = c.clone();
        for d in 1..=1000 {
            if acc.is_one() {
                return d;
            }
            acc = &acc * c;
        }
        panic!("no finite order found");
    }

    #[test]
    fn cyclotomic_polynomials() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        for m in 1..40 {
            assert_eq!(cyclotomic_polynomial(m).len() as u64 - 1, euler_phi(m));
        }
    }

    #[test]
    fn root_of_unity_examples() {
        assert!(root_of_unity(&w(0, 1), 4).unwrap().is_one());
        let minus_one = root_of_unity(&w(1, 2), 4).unwrap();
        assert_eq!(minus_one, Cyclotomic::from_int(-1));
        assert_eq!(minus_one, Cyclotomic::zeta_power(2, 4));
        let z = root_of_unity(&w(1, 3), 12).unwrap();
        assert_eq!(z, Cyclotomic::zeta_power(4, 12));
        assert_eq!(brute_order(&z), 3);
        assert!(matches!(
            root_of_unity(&w(1, 3), 4),
            Err(ScalarError::DenominatorNotDividing { .. })
        ));
    }

    #[test]
    fn embed_examples() {
        let one = Cyclotomic::from_rational(Rational::one(), 2);
        let e = cyclotomic_embed(&one, 6).unwrap();
        assert_eq!(e.order(), 6);
        assert!(e.is_one());

        let m1 = Cyclotomic::from_rational(Rational::from_int(-1), 2);
        let e = cyclotomic_embed(&m1, 4).unwrap();
        assert!((&e * &e).is_one());
        assert!(!e.is_one());
        assert_eq!(e.coeffs(), Cyclotomic::zeta_power(2, 4).coeffs());

        let z3 = Cyclotomic::zeta_power(1, 3);
        let e = cyclotomic_embed(&z3, 12).unwrap();
        assert_eq!(e.coeffs(), Cyclotomic::zeta_power(4, 12).coeffs());
        assert_eq!(brute_order(&e), 3);

        assert!(matches!(
            cyclotomic_embed(&z3, 8),
            Err(ScalarError::IncompatibleOrders { from: 3, to: 8 })
        ));
    }

    #[test]
    fn inverse_and_division() {
        let a = &Cyclotomic::zeta_power(1, 5) + &Cyclotomic::from_int(2);
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(Cyclotomic::zero().inv(), Err(ScalarError::DivisionByZero));
        let i = Cyclotomic::zeta_power(1, 4);
        assert_eq!(i.pow(-1).unwrap(), Cyclotomic::zeta_power(3, 4));
    }

    #[test]
    fn cross_order_equality() {
        // ζ_6 = -ζ_3^2
        let z6 = Cyclotomic::zeta_power(1, 6);
        let z3sq = Cyclotomic::zeta_power(2, 3);
        assert_eq!(z6, -z3sq);
        // 1 + ζ_3 + ζ_3^2 = 0
        let s =
            &(&Cyclotomic::one() + &Cyclotomic::zeta_power(1, 3)) + &Cyclotomic::zeta_power(2, 3);
        assert!(s.is_zero());
    }

    #[test]
    fn json_round_trip() {
        let c = Cyclotomic::zeta_power(5, 12);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"order":12,"coeffs":["0/1","-1/1","0/1","1/1"]}"#);
        let back: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<Cyclotomic>(r#"{"order":4,"coeffs":["1/1"]}"#).is_err());
    }
}
