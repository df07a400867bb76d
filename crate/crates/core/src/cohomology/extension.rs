use serde::Serialize;

use super::{Cochain2, CohomologyError, FiniteAbelianGroup};

/// The central extension 1 → Z′ → Γ_c → Γ → 1 defined by a 2-cochain,
/// with multiplication `(z, γ)(z′, γ′) = (z z′ c(γ, γ′), γγ′)`.
///
/// Element `(z, γ)` has index `γ·m + z`; index 0 is `(1, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionGroup {
    base: FiniteAbelianGroup,
    coeff_order: u64,
    table: Vec<usize>,
}

impl ExtensionGroup {
    /// Builds the multiplication table without checking any axiom.
    pub fn from_cochain_unchecked(c: &Cochain2) -> Self {
        let base = c.group().clone();
        let m = c.coeff_order() as usize;
        let size = base.order() * m;
        let mut table = Vec::with_capacity(size * size);
        for a in 0..size {
            let (ga, za) = (a / m, a % m);
            for b in 0..size {
                let (gb, zb) = (b / m, b % m);
                let z = (za + zb + c.get(ga, gb) as usize) % m;
                table.push(base.op(ga, gb) * m + z);
            }
        }
        ExtensionGroup {
            base,
            coeff_order: c.coeff_order(),
            table,
        }
    }

    pub fn order(&self) -> usize {
        self.base.order() * self.coeff_order as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn element(&self, z: u64, gamma: usize) -> usize {
        gamma * self.coeff_order as usize + (z % self.coeff_order) as usize
    }

    /// `(z, γ)` for an index.
    pub fn parts(&self, index: usize) -> (u64, usize) {
        let m = self.coeff_order as usize;
        ((index % m) as u64, index / m)
    }

    pub fn associativity_witness(&self) -> Option<[usize; 3]> {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn has_identity(&self) -> bool {
        (0..self.order()).all(|a| self.mul(0, a) == a && self.mul(a, 0) == a)
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.order()).find(|&b| self.mul(a, b) == 0 && self.mul(b, a) == 0)
    }

    pub fn has_inverses(&self) -> bool {
        (0..self.order()).all(|a| self.inverse(a).is_some())
    }

    /// Z′ × {1} commutes with every element.
    pub fn kernel_is_central(&self) -> bool {
        let m = self.coeff_order;
        (0..m).all(|z| {
            let k = self.element(z, 0);
            (0..self.order()).all(|a| self.mul(k, a) == self.mul(a, k))
        })
    }

    /// The projection `(z, γ) ↦ γ` is a homomorphism onto Γ whose kernel is
    /// exactly Z′ × {1}.
    pub fn projects_onto_base(&self) -> bool {
        let n = self.order();
        let hom = (0..n).all(|a| {
            (0..n).all(|b| {
                self.parts(self.mul(a, b)).1 == self.base.op(self.parts(a).1, self.parts(b).1)
            })
        });
        let kernel = (0..n).filter(|&a| self.parts(a).1 == 0).count();
        hom && kernel == self.coeff_order as usize
    }

    pub fn is_group(&self) -> bool {
        self.is_associative() && self.has_identity() && self.has_inverses()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, a);
            k += 1;
            assert!(
                k <= self.order(),
                "element of infinite order in a finite table"
            );
        }
        k
    }

    /// Sorted multiset of element orders; an isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order()).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Exhaustive isomorphism test: tries every assignment of a generating
    /// set of `self` to elements of `other` with matching orders, extends it
    /// along words and checks it is a bijective homomorphism.
    pub fn is_isomorphic(&self, other: &ExtensionGroup) -> bool {
        if self.order() != other.order() || self.order_profile() != other.order_profile() {
            return false;
        }
        let gens = self.generating_set();
        let mut images = vec![0usize; gens.len()];
        self.try_assign(other, &gens, 0, &mut images)
    }

    fn generating_set(&self) -> Vec<usize> {
        let n = self.order();
        let mut span = vec![false; n];
        span[0] = true;
        let mut gens = Vec::new();
        // prefer high-order elements so the set stays small
        let mut candidates: Vec<usize> = (0..n).collect();
        candidates.sort_by_key(|&a| std::cmp::Reverse(self.element_order(a)));
        for a in candidates {
            if span[a] {
                continue;
            }
            gens.push(a);
            span = self.closure(&gens);
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let n = self.order();
        let mut span = vec![false; n];
        span[0] = true;
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !span[y] {
                    span[y] = true;
                    frontier.push(y);
                }
            }
        }
        span
    }

    fn try_assign(
        &self,
        other: &ExtensionGroup,
        gens: &[usize],
        i: usize,
        images: &mut Vec<usize>,
    ) -> bool {
        if i == gens.len() {
            return self.extends_to_isomorphism(other, gens, images);
        }
        let target_order = self.element_order(gens[i]);
        for cand in 0..other.order() {
            if other.element_order(cand) != target_order {
                continue;
            }
            images[i] = cand;
            if self.try_assign(other, gens, i + 1, images) {
                return true;
            }
        }
        false
    }

    fn extends_to_isomorphism(
        &self,
        other: &ExtensionGroup,
        gens: &[usize],
        images: &[usize],
    ) -> bool {
        let n = self.order();
        let mut map: Vec<Option<usize>> = vec![None; n];
        map[0] = Some(0);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            let fx = map[x].expect("visited");
            for (&g, &h) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let fy = other.mul(fx, h);
                match map[y] {
                    Some(prev) if prev != fy => return false,
                    Some(_) => {}
                    None => {
                        map[y] = Some(fy);
                        frontier.push(y);
                    }
                }
            }
        }
        let map: Vec<usize> = map
            .into_iter()
            .map(|v| v.expect("generating set"))
            .collect();
        let mut seen = vec![false; n];
        for &v in &map {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        (0..n).all(|a| (0..n).all(|b| map[self.mul(a, b)] == other.mul(map[a], map[b])))
    }
}

/// The extension group Γ_c of a cocycle.
///
/// Associativity of the table and the cocycle identity are checked
/// independently; they must agree.
pub fn central_extension(c: &Cochain2) -> Result<ExtensionGroup, CohomologyError> {
    let g = ExtensionGroup::from_cochain_unchecked(c);
    let cocycle = c.cocycle_witness();
    let assoc = g.associativity_witness();
    match (cocycle, assoc) {
        (None, None) => Ok(g),
        (Some(triple), Some(_)) => Err(CohomologyError::NotACocycle { which: 0, triple }),
        (cocycle, assoc) => Err(CohomologyError::Inconsistent(format!(
            "cocycle witness {cocycle:?} but associativity witness {assoc:?}"
        ))),
    }
}
