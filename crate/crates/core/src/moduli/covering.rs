use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::ModuliError;

/// A ramified Galois cover `X → Y = X/Γ` with `|Γ| = N`.
///
/// Each entry of `orbits` is the isotropy order `N_j` of one branch orbit;
/// that orbit has `N/N_j` points on `X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringData {
    pub genus_x: i64,
    #[serde(rename = "N")]
    pub group_order: u64,
    #[serde(default)]
    pub orbits: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RiemannHurwitz {
    pub genus_y: i64,
    /// `∑ (N/N_j)(N_j − 1)`.
    pub ramification: i64,
    pub orbit_sizes: Vec<u64>,
}

impl CoveringData {
    pub fn validate(&self) -> Result<(), ModuliError> {
        if self.genus_x < 2 {
            return Err(ModuliError::InvalidCovering(format!(
                "genus of X is {}, need at least 2",
                self.genus_x
            )));
        }
        if self.group_order == 0 {
            return Err(ModuliError::InvalidCovering("group order is zero".into()));
        }
        for &nj in &self.orbits {
            if nj < 2 || !self.group_order.is_multiple_of(nj) {
                return Err(ModuliError::InvalidCovering(format!(
                    "isotropy order {nj} must be at least 2 and divide {}",
                    self.group_order
                )));
            }
        }
        Ok(())
    }

    pub fn orbit_sizes(&self) -> Vec<u64> {
        self.orbits
            .iter()
            .map(|&nj| self.group_order / nj)
            .collect()
    }

    pub fn ramification(&self) -> i64 {
        self.orbits
            .iter()
            .map(|&nj| ((self.group_order / nj) * (nj - 1)) as i64)
            .sum()
    }
}

/// Solves `2g_X − 2 = N(2g_Y − 2) + ∑ (N/N_j)(N_j − 1)` for `g_Y`.
///
/// Also checks the abelian monodromy condition: the local monodromies
/// multiply to the identity, so each `N_j` divides the lcm of the others.
pub fn riemann_hurwitz(data: &CoveringData) -> Result<RiemannHurwitz, ModuliError> {
    data.validate()?;
    let n = data.group_order as i64;
    let r = data.ramification();
    let lhs = 2 * data.genus_x - 2 - r;
    if lhs % n != 0 || (lhs / n + 2) % 2 != 0 {
        return Err(ModuliError::NonIntegralGenus(format!(
            "2g_Y − 2 = {lhs}/{n}"
        )));
    }
    let genus_y = (lhs / n + 2) / 2;
    if genus_y < 0 {
        return Err(ModuliError::NegativeGenus(genus_y));
    }
    for (i, &nj) in data.orbits.iter().enumerate() {
        let others = data
            .orbits
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .fold(1u64, |acc, (_, &x)| acc.lcm(&x));
        if others % nj != 0 {
            return Err(ModuliError::UnrealizableBranching(format!(
                "isotropy order {nj} does not divide the lcm {others} of the other orbits"
            )));
        }
    }
    Ok(RiemannHurwitz {
        genus_y,
        ramification: r,
        orbit_sizes: data.orbit_sizes(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cov(g: i64, n: u64, orbits: &[u64]) -> CoveringData {
        CoveringData {
            genus_x: g,
            group_order: n,
            orbits: orbits.to_vec(),
        }
    }

    #[test]
    fn worked_examples() {
        assert_eq!(riemann_hurwitz(&cov(2, 2, &[2, 2])).unwrap().genus_y, 1);
        assert_eq!(riemann_hurwitz(&cov(3, 2, &[])).unwrap().genus_y, 2);
        assert!(matches!(
            riemann_hurwitz(&cov(2, 3, &[])),
            Err(ModuliError::NonIntegralGenus(_))
        ));
        assert!(matches!(
            riemann_hurwitz(&cov(2, 3, &[3])),
            Err(ModuliError::UnrealizableBranching(_))
        ));
        // hyperelliptic involution of a genus-2 curve: six fixed points
        assert_eq!(riemann_hurwitz(&cov(2, 2, &[2; 6])).unwrap().genus_y, 0);
    }

    #[test]
    fn rejects_bad_data() {
        assert!(matches!(
            riemann_hurwitz(&cov(1, 2, &[])),
            Err(ModuliError::InvalidCovering(_))
        ));
        assert!(matches!(
            riemann_hurwitz(&cov(2, 4, &[3, 3])),
            Err(ModuliError::InvalidCovering(_))
        ));
        assert!(matches!(
            riemann_hurwitz(&cov(2, 2, &[2; 10])),
            Err(ModuliError::NegativeGenus(-1))
        ));
    }

    #[test]
    fn formula_reproduces_genus_x() {
        for n in 2..=6u64 {
            for g in 2..=6i64 {
                let mut orbits = vec![];
                for _ in 0..4 {
                    orbits.push(n);
                    let d = cov(g, n, &orbits);
                    if let Ok(rh) = riemann_hurwitz(&d) {
                        assert_eq!(
                            2 * g - 2,
                            n as i64 * (2 * rh.genus_y - 2) + d.ramification()
                        );
                    }
                }
            }
        }
    }
}
