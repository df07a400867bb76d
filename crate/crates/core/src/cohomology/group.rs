use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::CohomologyError;

/// A finite abelian group ℤ/n₁ × ⋯ × ℤ/n_t.
///
/// Elements are exponent tuples; they are addressed by a canonical index in
/// mixed radix with the first factor most significant, so index 0 is the
/// identity and for a cyclic group the index is the exponent of the generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    /// Factors equal to 1 are kept; an empty list is the trivial group.
    pub fn new(factors: Vec<u64>) -> Result<Self, CohomologyError> {
        if factors.contains(&0) {
            return Err(CohomologyError::InvalidGroup(format!("{factors:?}")));
        }
        Ok(FiniteAbelianGroup { factors })
    }

    pub fn cyclic(n: u64) -> Self {
        Self::new(vec![n]).expect("positive order")
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: vec![] }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product::<u64>() as usize
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.iter().fold(1u64, |acc, &n| {
            if acc == 0 || acc.gcd(&n) != 1 {
                0
            } else {
                acc * n
            }
        }) != 0
    }

    pub fn element(&self, index: usize) -> Vec<u64> {
        let mut rest = index as u64;
        let mut out = vec![0; self.factors.len()];
        for (slot, &n) in out.iter_mut().zip(&self.factors).rev() {
            *slot = rest % n;
            rest /= n;
        }
        out
    }

    pub fn index(&self, element: &[u64]) -> usize {
        element
            .iter()
            .zip(&self.factors)
            .fold(0u64, |acc, (&e, &n)| acc * n + e % n) as usize
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        let (ea, eb) = (self.element(a), self.element(b));
        let sum: Vec<u64> = ea
            .iter()
            .zip(&eb)
            .zip(&self.factors)
            .map(|((x, y), n)| (x + y) % n)
            .collect();
        self.index(&sum)
    }

    pub fn inverse(&self, a: usize) -> usize {
        let neg: Vec<u64> = self
            .element(a)
            .iter()
            .zip(&self.factors)
            .map(|(x, n)| (n - x) % n)
            .collect();
        self.index(&neg)
    }

    /// `a^k` for `k >= 0`.
    pub fn power(&self, a: usize, k: u64) -> usize {
        let scaled: Vec<u64> = self
            .element(a)
            .iter()
            .zip(&self.factors)
            .map(|(x, n)| (x * (k % n)) % n)
            .collect();
        self.index(&scaled)
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.element(a)
            .iter()
            .zip(&self.factors)
            .fold(1u64, |acc, (&x, &n)| acc.lcm(&(n / n.gcd(&x))))
    }

    /// Multiplication table, row-major over canonical indices.
    pub fn table(&self) -> Vec<usize> {
        let n = self.order();
        let mut t = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                t.push(self.op(a, b));
            }
        }
        t
    }
}

impl TryFrom<Vec<u64>> for FiniteAbelianGroup {
    type Error = CohomologyError;
    fn try_from(v: Vec<u64>) -> Result<Self, Self::Error> {
        FiniteAbelianGroup::new(v)
    }
}

impl From<FiniteAbelianGroup> for Vec<u64> {
    fn from(g: FiniteAbelianGroup) -> Self {
        g.factors
    }
}

/// An injective homomorphism from `source` into an ambient group, given by
/// the images of the standard generators of each cyclic factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupEmbedding {
    source: FiniteAbelianGroup,
    images: Vec<usize>,
    map: Vec<usize>,
}

impl SubgroupEmbedding {
    pub fn new(
        source: FiniteAbelianGroup,
        generator_images: Vec<usize>,
        ambient: &FiniteAbelianGroup,
    ) -> Result<Self, CohomologyError> {
        let not_sub = |why: &str| CohomologyError::NotASubgroup(why.to_string());
        if generator_images.len() != source.factors().len() {
            return Err(not_sub("one image per cyclic factor is required"));
        }
        if generator_images.iter().any(|&g| g >= ambient.order()) {
            return Err(not_sub(
                "generator image is not an element of the ambient group",
            ));
        }
        for (&g, &n) in generator_images.iter().zip(source.factors()) {
            if n % ambient.element_order(g) != 0 {
                return Err(not_sub(
                    "generator image order does not divide the factor order",
                ));
            }
        }
        let map: Vec<usize> = (0..source.order())
            .map(|i| {
                source
                    .element(i)
                    .iter()
                    .zip(&generator_images)
                    .fold(0, |acc, (&e, &g)| ambient.op(acc, ambient.power(g, e)))
            })
            .collect();
        let mut seen = map.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != map.len() {
            return Err(not_sub("map is not injective"));
        }
        Ok(SubgroupEmbedding {
            source,
            images: generator_images,
            map,
        })
    }

    /// The identity embedding of a group into itself.
    pub fn identity(group: &FiniteAbelianGroup) -> Self {
        let images = (0..group.factors().len())
            .map(|i| {
                let mut e = vec![0; group.factors().len()];
                e[i] = 1;
                group.index(&e)
            })
            .collect();
        SubgroupEmbedding::new(group.clone(), images, group).expect("identity embeds")
    }

    /// The cyclic subgroup generated by `g`.
    pub fn cyclic_generated_by(
        g: usize,
        ambient: &FiniteAbelianGroup,
    ) -> Result<Self, CohomologyError> {
        let n = ambient.element_order(g);
        SubgroupEmbedding::new(FiniteAbelianGroup::cyclic(n), vec![g], ambient)
    }

    pub fn source(&self) -> &FiniteAbelianGroup {
        &self.source
    }

    pub fn generator_images(&self) -> &[usize] {
        &self.images
    }

    /// Image of each source element, by canonical index.
    pub fn map(&self) -> &[usize] {
        &self.map
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_round_trip() {
        let g = FiniteAbelianGroup::new(vec![2, 3]).unwrap();
        assert_eq!(g.order(), 6);
        for i in 0..6 {
            assert_eq!(g.index(&g.element(i)), i);
        }
        assert_eq!(g.element(5), vec![1, 2]);
        assert_eq!(g.op(5, 5), g.index(&[0, 1]));
        assert_eq!(g.element_order(g.index(&[1, 1])), 6);
        assert!(g.is_cyclic());
        assert!(!FiniteAbelianGroup::new(vec![2, 2]).unwrap().is_cyclic());
    }

    #[test]
    fn embeddings() {
        let z4 = FiniteAbelianGroup::cyclic(4);
        let e = SubgroupEmbedding::new(FiniteAbelianGroup::cyclic(2), vec![2], &z4).unwrap();
        assert_eq!(e.map(), &[0, 2]);
        assert!(SubgroupEmbedding::new(FiniteAbelianGroup::cyclic(2), vec![1], &z4).is_err());
        assert!(SubgroupEmbedding::new(FiniteAbelianGroup::cyclic(4), vec![2], &z4).is_err());
        let id = SubgroupEmbedding::identity(&z4);
        assert_eq!(id.map(), &[0, 1, 2, 3]);
        let trivial = SubgroupEmbedding::new(FiniteAbelianGroup::trivial(), vec![], &z4).unwrap();
        assert_eq!(trivial.map(), &[0]);
    }
}
