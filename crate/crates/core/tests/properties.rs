use proptest::prelude::*;

use pseudohiggs::cohomology::{
    class_representative, coboundary, h2_classes, FiniteAbelianGroup, ScaleBounds,
};
use pseudohiggs::lie::{alcove_normalize, GroupModel};
use pseudohiggs::local::{ascend, descend, GradedSeries, Term, Variable};
use pseudohiggs::moduli::{
    degree_pairing, riemann_hurwitz, CoveringData, FlagDegreeData, GradedPiece, ModuliError,
};
use pseudohiggs::scalars::{euler_phi, normalize_weight, Convention, Cyclotomic, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn cyclotomic(order: u64) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(rational(), euler_phi(order) as usize)
        .prop_map(move |c| Cyclotomic::from_coeffs(order, c).unwrap())
}

fn field_triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    prop::sample::select(vec![1u64, 3, 4, 5, 8, 12])
        .prop_flat_map(|m| (cyclotomic(m), cyclotomic(m), cyclotomic(m)))
}

proptest! {
    #[test]
    fn cyclotomic_field_axioms((a, b, c) in field_triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &a), &Cyclotomic::zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn cyclotomic_json_round_trip(a in prop::sample::select(vec![1u64, 4, 6, 7]).prop_flat_map(cyclotomic)) {
        let text = serde_json::to_string(&a).unwrap();
        let back: Cyclotomic = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn rational_text_round_trip(x in rational()) {
        let back: Rational = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn weight_normalization_idempotent(x in rational()) {
        for conv in [Convention::ResidueInZeroOne, Convention::SignedRepresentative] {
            let once = normalize_weight(&x, conv).into_value();
            let twice = normalize_weight(&once, conv).into_value();
            prop_assert_eq!(&once, &twice);
            prop_assert!((&x - &once).is_integer());
        }
    }

    #[test]
    fn alcove_idempotent_and_symmetric(
        model in prop::sample::select(vec![
            GroupModel::ComplexGl(3), GroupModel::ComplexSl(3), GroupModel::Upq(1, 2), GroupModel::ComplexGl(4),
        ]),
        raw in prop::collection::vec(rational(), 4),
        shifts in prop::collection::vec(-3i64..=3, 4),
        rot in 0usize..4,
    ) {
        let r = model.size();
        let mut exps: Vec<Rational> = raw[..r].to_vec();
        if model.is_traceless() {
            let sum = exps[..r - 1].iter().fold(Rational::zero(), |a, x| &a + x);
            exps[r - 1] = -&sum;
        }
        let w = alcove_normalize(model, &exps).unwrap();
        prop_assert_eq!(&alcove_normalize(model, &w.entries).unwrap().entries, &w.entries);
        // integer shifts and permutations within blocks give the same class
        let mut moved: Vec<Rational> = exps.iter().zip(&shifts).map(|(x, &k)| x + &Rational::from_int(k)).collect();
        if model.is_traceless() {
            let total: i64 = shifts[..r - 1].iter().sum();
            moved[r - 1] = &exps[r - 1] - &Rational::from_int(total);
        }
        for b in model.blocks() {
            let len = b.len();
            moved[b].rotate_left(rot % len.max(1));
        }
        prop_assert_eq!(alcove_normalize(model, &moved).unwrap().entries, w.entries);
    }

    #[test]
    fn coboundaries_do_not_change_the_class(
        n in 2u64..=5, m in 2u64..=4, pick in 0usize..8, f in prop::collection::vec(0u64..4, 5),
    ) {
        let group = FiniteAbelianGroup::cyclic(n);
        let bounds = ScaleBounds::default();
        let reps = h2_classes(&group, m, &bounds).unwrap();
        let rep = &reps[pick % reps.len()];
        let mut f: Vec<u64> = f[..n as usize].iter().map(|x| x % m).collect();
        f[0] = 0;
        let moved = rep.multiply(&coboundary(&group, m, &f).unwrap()).unwrap();
        prop_assert_eq!(class_representative(&moved, &bounds).unwrap(), rep.clone());
    }

    #[test]
    fn degree_pairing_linear(
        s in prop::collection::vec(-3i64..=3, 1..=4),
        d1 in prop::collection::vec(-5i64..=5, 4),
        d2 in prop::collection::vec(-5i64..=5, 4),
        lambda in rational(),
    ) {
        let s: Vec<Rational> = s.into_iter().map(Rational::from_int).collect();
        let base = FlagDegreeData { s: s.clone(), pieces: vec![], corrections: vec![] };
        let values = base.distinct_values();
        let flag = |s: Vec<Rational>, d: &[i64]| FlagDegreeData {
            s,
            pieces: values.iter().zip(d).map(|((_, mult), &degree)| GradedPiece { rank: *mult, degree }).collect(),
            corrections: vec![],
        };
        let p1 = degree_pairing(&flag(s.clone(), &d1)).unwrap();
        let p2 = degree_pairing(&flag(s.clone(), &d2)).unwrap();
        let sum: Vec<i64> = d1.iter().zip(&d2).map(|(a, b)| a + b).collect();
        prop_assert_eq!(degree_pairing(&flag(s.clone(), &sum)).unwrap(), &p1 + &p2);
        if !lambda.is_zero() {
            let scaled: Vec<Rational> = s.iter().map(|x| x * &lambda).collect();
            prop_assert_eq!(degree_pairing(&flag(scaled, &d1)).unwrap(), &p1 * &lambda);
        }
        let zero = vec![Rational::zero(); s.len()];
        let zero_flag = FlagDegreeData { s: zero, pieces: vec![GradedPiece { rank: s.len(), degree: d1[0] }], corrections: vec![] };
        prop_assert!(degree_pairing(&zero_flag).unwrap().is_zero());
    }

    #[test]
    fn riemann_hurwitz_feeds_back(
        genus_y in 0i64..=4,
        n in 2u64..=8,
        picks in prop::collection::vec(0usize..8, 0..=5),
    ) {
        let divisors: Vec<u64> = (2..=n).filter(|d| n % d == 0).collect();
        let orbits: Vec<u64> = picks.iter().map(|&i| divisors[i % divisors.len()]).collect();
        let ram: i64 = orbits.iter().map(|&nj| (n / nj) as i64 * (nj as i64 - 1)).sum();
        let two_gx = n as i64 * (2 * genus_y - 2) + ram + 2;
        prop_assume!(two_gx % 2 == 0 && two_gx / 2 >= 2);
        let data = CoveringData { genus_x: two_gx / 2, group_order: n, orbits };
        match riemann_hurwitz(&data) {
            Ok(out) => prop_assert_eq!(out.genus_y, genus_y),
            Err(ModuliError::UnrealizableBranching(_)) => {}
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }
}

fn gl3_series(coeffs: &[(usize, usize, i64, i64)], variable: Variable, trunc: i64) -> GradedSeries {
    let alpha = vec![Rational::new(2, 3), Rational::new(1, 3), Rational::zero()];
    let terms = coeffs
        .iter()
        .map(|&(i, j, k, c)| Term {
            basis: [i, j],
            k,
            coeff: Cyclotomic::from_int(c),
        })
        .collect();
    GradedSeries::new(GroupModel::ComplexGl(3), alpha, 3, variable, trunc, terms).unwrap()
}

/// Allowed upstairs monomials for GL(3), N = 3, α = (2/3, 1/3, 0), k ≤ 12.
fn invariant_monomials() -> Vec<(usize, usize, i64)> {
    let alpha = [Rational::new(2, 3), Rational::new(1, 3), Rational::zero()];
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let beta = &alpha[i] - &alpha[j];
            for k in 0..=12i64 {
                let x = &Rational::from_int(k + 1) + &(&Rational::from_int(3) * &beta);
                if x.to_i64().unwrap().rem_euclid(3) == 0 {
                    out.push((i + 1, j + 1, k));
                }
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn descent_is_linear(a in prop::collection::vec(-4i64..=4, 40), b in prop::collection::vec(-4i64..=4, 40)) {
        let mons = invariant_monomials();
        let make = |v: &[i64]| {
            let c: Vec<_> = mons.iter().zip(v).map(|(&(i, j, k), &x)| (i, j, k, x)).collect();
            gl3_series(&c, Variable::Upstairs, 12)
        };
        let (sa, sb) = (make(&a), make(&b));
        let (da, _) = descend(&sa).unwrap();
        let (db, _) = descend(&sb).unwrap();
        let (dsum, _) = descend(&sa.add(&sb).unwrap()).unwrap();
        prop_assert_eq!(dsum, da.add(&db).unwrap());
        let two = Cyclotomic::from_int(2);
        let (dscaled, _) = descend(&sa.scale(&two)).unwrap();
        prop_assert_eq!(dscaled, da.scale(&two));
        prop_assert!(ascend(&da).unwrap().agrees_with(&sa));
    }

    #[test]
    fn series_json_round_trip(a in prop::collection::vec(-4i64..=4, 40)) {
        let mons = invariant_monomials();
        let c: Vec<_> = mons.iter().zip(&a).map(|(&(i, j, k), &x)| (i, j, k, x)).collect();
        let s = gl3_series(&c, Variable::Upstairs, 12);
        let back: GradedSeries = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        prop_assert_eq!(back, s);
    }
}
