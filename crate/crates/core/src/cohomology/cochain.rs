use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{CohomologyError, FiniteAbelianGroup, ScaleBounds, SubgroupEmbedding};
use crate::scalars::Rational;

/// A normalized 2-cochain Γ × Γ → ℤ/m with trivial Γ-action.
///
/// Values are stored additively: entry `k` stands for the root of unity
/// `e^{2πik/m}`. Only normalized cochains (`c(γ,1) = c(1,γ) = 1`) can be
/// constructed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCochain", into = "RawCochain")]
pub struct Cochain2 {
    group: FiniteAbelianGroup,
    coeff_order: u64,
    table: Vec<u64>,
}

/// First triple `(γ, γ′, γ″)` at which the cocycle identity fails.
pub type CocycleWitness = [usize; 3];

impl Cochain2 {
    /// Builds a cochain from a full row-major table of exponents mod `m`.
    pub fn new(
        group: FiniteAbelianGroup,
        coeff_order: u64,
        table: Vec<u64>,
    ) -> Result<Self, CohomologyError> {
        let n = group.order();
        if coeff_order == 0 {
            return Err(CohomologyError::InvalidCoefficients(coeff_order));
        }
        if table.len() != n * n {
            return Err(CohomologyError::TableShape {
                expected: n * n,
                found: table.len(),
            });
        }
        let table: Vec<u64> = table.into_iter().map(|k| k % coeff_order).collect();
        for g in 0..n {
            if table[g * n] != 0 || table[g] != 0 {
                return Err(CohomologyError::NotNormalized { element: g });
            }
        }
        Ok(Cochain2 {
            group,
            coeff_order,
            table,
        })
    }

    pub fn from_fn(
        group: FiniteAbelianGroup,
        coeff_order: u64,
        f: impl Fn(usize, usize) -> u64,
    ) -> Result<Self, CohomologyError> {
        let n = group.order();
        let table = (0..n * n).map(|i| f(i / n, i % n)).collect();
        Cochain2::new(group, coeff_order, table)
    }

    pub fn trivial(group: FiniteAbelianGroup, coeff_order: u64) -> Self {
        let n = group.order();
        Cochain2::new(group, coeff_order, vec![0; n * n]).expect("zero table is normalized")
    }

    /// The cocycle `c(γ^a, γ^b) = w·⌊(a+b)/n⌋` on ℤ/n, representing the
    /// class of `w` under H²(ℤ/n, ℤ/m) ≅ ℤ/m / nℤ/m.
    pub fn cyclic_standard(n: u64, coeff_order: u64, w: u64) -> Self {
        Cochain2::from_fn(FiniteAbelianGroup::cyclic(n), coeff_order, |a, b| {
            w * ((a as u64 + b as u64) / n)
        })
        .expect("standard cocycle is normalized")
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn coeff_order(&self) -> u64 {
        self.coeff_order
    }

    pub fn table(&self) -> &[u64] {
        &self.table
    }

    /// Exponent `k` of `c(a, b) = e^{2πik/m}`.
    pub fn get(&self, a: usize, b: usize) -> u64 {
        self.table[a * self.group.order() + b]
    }

    /// `c(a, b)` as a fraction `k/m` in `[0, 1)`.
    pub fn value(&self, a: usize, b: usize) -> Rational {
        Rational::new(self.get(a, b) as i64, self.coeff_order as i64)
    }

    /// Checks `c(γγ′,γ″)c(γ,γ′) = c(γ,γ′γ″)c(γ′,γ″)` on every triple;
    /// returns the first failing triple in canonical order.
    pub fn cocycle_witness(&self) -> Option<CocycleWitness> {
        let n = self.group.order();
        let m = self.coeff_order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.group.op(x, y);
                for z in 0..n {
                    let yz = self.group.op(y, z);
                    let lhs = (self.get(xy, z) + self.get(x, y)) % m;
                    let rhs = (self.get(x, yz) + self.get(y, z)) % m;
                    if lhs != rhs {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    pub fn is_cocycle(&self) -> bool {
        self.cocycle_witness().is_none()
    }

    /// Pointwise product of two cochains over the same `(Γ, Z′)`.
    pub fn multiply(&self, other: &Cochain2) -> Result<Cochain2, CohomologyError> {
        self.same_shape(other)?;
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(a, b)| (a + b) % self.coeff_order)
            .collect();
        Cochain2::new(self.group.clone(), self.coeff_order, table)
    }

    fn same_shape(&self, other: &Cochain2) -> Result<(), CohomologyError> {
        if self.group != other.group || self.coeff_order != other.coeff_order {
            return Err(CohomologyError::ShapeMismatch);
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawCochain {
    group: FiniteAbelianGroup,
    coeff_order: u64,
    table: Vec<(usize, usize, Rational)>,
}

impl TryFrom<RawCochain> for Cochain2 {
    type Error = CohomologyError;

    fn try_from(raw: RawCochain) -> Result<Self, Self::Error> {
        let n = raw.group.order();
        let m = raw.coeff_order;
        let mut table = vec![0u64; n * n];
        for (i, j, v) in raw.table {
            if i >= n || j >= n {
                return Err(CohomologyError::TableShape {
                    expected: n * n,
                    found: i.max(j) * n,
                });
            }
            let k = (&v * &Rational::from_int(m as i64))
                .to_i64()
                .ok_or_else(|| CohomologyError::ValueNotInCoefficients {
                    value: v.to_string(),
                    order: m,
                })?;
            table[i * n + j] = k.rem_euclid(m as i64) as u64;
        }
        Cochain2::new(raw.group, m, table)
    }
}

impl From<Cochain2> for RawCochain {
    fn from(c: Cochain2) -> Self {
        let n = c.group.order();
        let table = (0..n * n)
            .filter(|&i| c.table[i] != 0)
            .map(|i| (i / n, i % n, c.value(i / n, i % n)))
            .collect();
        RawCochain {
            group: c.group,
            coeff_order: c.coeff_order,
            table,
        }
    }
}

/// `(γ, γ′) ↦ f(γγ′) f(γ)⁻¹ f(γ′)⁻¹` for a normalized `f: Γ → ℤ/m`.
pub fn coboundary(
    group: &FiniteAbelianGroup,
    coeff_order: u64,
    f: &[u64],
) -> Result<Cochain2, CohomologyError> {
    let n = group.order();
    if f.len() != n {
        return Err(CohomologyError::TableShape {
            expected: n,
            found: f.len(),
        });
    }
    if !f[0].is_multiple_of(coeff_order) {
        return Err(CohomologyError::NotNormalized { element: 0 });
    }
    let m = coeff_order;
    Cochain2::from_fn(group.clone(), m, |a, b| {
        (f[group.op(a, b)] % m + 2 * m - f[a] % m - f[b] % m) % m
    })
}

/// Iterates over every normalized function Γ → ℤ/m as a value vector.
fn normalized_functions(n: usize, m: u64) -> impl Iterator<Item = Vec<u64>> {
    let total = (m as u128).pow(n.saturating_sub(1) as u32);
    (0..total).map(move |mut code| {
        let mut f = vec![0u64; n];
        for slot in f.iter_mut().skip(1) {
            *slot = (code % m as u128) as u64;
            code /= m as u128;
        }
        f
    })
}

fn search_size(n: usize, m: u64) -> u128 {
    (m as u128).saturating_pow(n.saturating_sub(1) as u32)
}

fn check_scale(
    group: &FiniteAbelianGroup,
    m: u64,
    bounds: &ScaleBounds,
) -> Result<(), CohomologyError> {
    let n = group.order();
    let space = search_size(n, m);
    if n as u64 > bounds.max_group_order
        || m > bounds.max_coeff_order
        || space > bounds.max_search as u128
    {
        return Err(CohomologyError::ScaleExceeded {
            group_order: n as u64,
            coeff_order: m,
            search: space,
        });
    }
    Ok(())
}

/// Searches for `f` with `c′ = δf · c`; returns the witness on success.
pub fn are_cohomologous(
    c: &Cochain2,
    c_prime: &Cochain2,
    bounds: &ScaleBounds,
) -> Result<Option<Vec<u64>>, CohomologyError> {
    c.same_shape(c_prime)?;
    for (which, x) in [c, c_prime].into_iter().enumerate() {
        if let Some(triple) = x.cocycle_witness() {
            return Err(CohomologyError::NotACocycle { which, triple });
        }
    }
    check_scale(&c.group, c.coeff_order, bounds)?;
    let m = c.coeff_order;
    let target: Vec<u64> = c_prime
        .table
        .iter()
        .zip(&c.table)
        .map(|(a, b)| (a + m - b) % m)
        .collect();
    for f in normalized_functions(c.group.order(), m) {
        let d = coboundary(&c.group, m, &f)?;
        if d.table == target {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// All normalized 2-cocycles, in lexicographic order of their tables,
/// found by backtracking with the cocycle identity checked as soon as all
/// four of its entries are assigned.
pub fn enumerate_cocycles(group: &FiniteAbelianGroup, coeff_order: u64) -> Vec<Cochain2> {
    let n = group.order();
    let m = coeff_order;
    if n <= 1 {
        return vec![Cochain2::trivial(group.clone(), m)];
    }
    // free positions: (a, b) with a, b != identity, row-major
    let pos = |a: usize, b: usize| -> Option<usize> {
        (a != 0 && b != 0).then(|| (a - 1) * (n - 1) + (b - 1))
    };
    let slots = (n - 1) * (n - 1);
    let mut checks: Vec<Vec<[usize; 3]>> = vec![Vec::new(); slots];
    for x in 1..n {
        for y in 1..n {
            for z in 1..n {
                let entries = [
                    pos(group.op(x, y), z),
                    pos(x, y),
                    pos(x, group.op(y, z)),
                    pos(y, z),
                ];
                if let Some(last) = entries.iter().flatten().max() {
                    checks[*last].push([x, y, z]);
                }
            }
        }
    }
    let mut table = vec![0u64; n * n];
    let mut out = Vec::new();
    fn holds(
        table: &[u64],
        group: &FiniteAbelianGroup,
        n: usize,
        m: u64,
        [x, y, z]: [usize; 3],
    ) -> bool {
        let get = |a: usize, b: usize| table[a * n + b];
        (get(group.op(x, y), z) + get(x, y)) % m == (get(x, group.op(y, z)) + get(y, z)) % m
    }
    fn recurse(
        slot: usize,
        table: &mut Vec<u64>,
        ctx: (&FiniteAbelianGroup, usize, u64, &[Vec<[usize; 3]>]),
        out: &mut Vec<Vec<u64>>,
    ) {
        let (group, n, m, checks) = ctx;
        if slot == checks.len() {
            out.push(table.clone());
            return;
        }
        let (a, b) = (slot / (n - 1) + 1, slot % (n - 1) + 1);
        for k in 0..m {
            table[a * n + b] = k;
            if checks[slot].iter().all(|&t| holds(table, group, n, m, t)) {
                recurse(slot + 1, table, ctx, out);
            }
        }
        table[a * n + b] = 0;
    }
    recurse(0, &mut table, (group, n, m, &checks), &mut out);
    out.into_iter()
        .map(|t| Cochain2::new(group.clone(), m, t).expect("normalized by construction"))
        .collect()
}

/// The set of coboundary tables δf over all normalized `f`.
pub fn enumerate_coboundaries(group: &FiniteAbelianGroup, coeff_order: u64) -> Vec<Vec<u64>> {
    let mut set = HashSet::new();
    let mut out = Vec::new();
    for f in normalized_functions(group.order(), coeff_order) {
        let t = coboundary(group, coeff_order, &f)
            .expect("normalized f")
            .table;
        if set.insert(t.clone()) {
            out.push(t);
        }
    }
    out.sort();
    out
}

/// One representative per class of H²(Γ, ℤ/m), by brute force: every
/// cocycle is enumerated and cocycles are grouped into cosets of the
/// coboundary subgroup. The representative of a class is its
/// lexicographically least table, and classes are listed in that order.
pub fn h2_classes(
    group: &FiniteAbelianGroup,
    coeff_order: u64,
    bounds: &ScaleBounds,
) -> Result<Vec<Cochain2>, CohomologyError> {
    check_scale(group, coeff_order, bounds)?;
    let m = coeff_order;
    let boundaries = enumerate_coboundaries(group, m);
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut reps = Vec::new();
    for c in enumerate_cocycles(group, m) {
        if seen.contains(&c.table) {
            continue;
        }
        for b in &boundaries {
            let t: Vec<u64> = c.table.iter().zip(b).map(|(x, y)| (x + y) % m).collect();
            seen.insert(t);
        }
        reps.push(c);
    }
    Ok(reps)
}

/// Canonical representative of the class of a cocycle: the least table in
/// its coset of coboundaries.
pub fn class_representative(
    c: &Cochain2,
    bounds: &ScaleBounds,
) -> Result<Cochain2, CohomologyError> {
    if let Some(triple) = c.cocycle_witness() {
        return Err(CohomologyError::NotACocycle { which: 0, triple });
    }
    check_scale(&c.group, c.coeff_order, bounds)?;
    let m = c.coeff_order;
    let best = enumerate_coboundaries(&c.group, m)
        .iter()
        .map(|b| {
            c.table
                .iter()
                .zip(b)
                .map(|(x, y)| (x + y) % m)
                .collect::<Vec<_>>()
        })
        .min()
        .expect("at least the trivial coboundary");
    Cochain2::new(c.group.clone(), m, best)
}

/// Restriction of `c` along a subgroup embedding.
pub fn restrict(c: &Cochain2, embedding: &SubgroupEmbedding) -> Result<Cochain2, CohomologyError> {
    let map = embedding.map();
    if map.iter().any(|&g| g >= c.group.order()) {
        return Err(CohomologyError::NotASubgroup(
            "embedding targets a different group".into(),
        ));
    }
    Cochain2::from_fn(embedding.source().clone(), c.coeff_order, |a, b| {
        c.get(map[a], map[b])
    })
}

/// `ζ(γ) = ∏_{i=1}^{n-1} c(γ, γ^i)` where `n` is the order of `γ`,
/// returned as an exponent mod `m`.
pub fn zeta(c: &Cochain2, gamma: usize) -> u64 {
    let g = &c.group;
    let n = g.element_order(gamma);
    (1..n).fold(0u64, |acc, i| {
        (acc + c.get(gamma, g.power(gamma, i))) % c.coeff_order
    })
}
