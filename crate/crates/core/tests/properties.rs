use std::collections::HashSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use symdirac::dirac::{branching_multiplicity, freudenthal_multiplicities};
use symdirac::symmspace::{catalog, inner_pairs};
use symdirac::weight::frac;
use symdirac::weyl::{dominant_representative, kostant_set_bruteforce, WeylElement};
use symdirac::{PositiveSystem, RootSystem, SimpleType, Weight};

fn simple_type() -> impl Strategy<Value = SimpleType> {
    let all = SimpleType::all_up_to(8);
    (0..all.len()).prop_map(move |i| all[i])
}

fn small_type() -> impl Strategy<Value = SimpleType> {
    let all = SimpleType::all_up_to(3);
    (0..all.len()).prop_map(move |i| all[i])
}

fn rational_weight(dim: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec((-12i64..=12, 1i64..=6), dim)
        .prop_map(|c| Weight::from_fracs(&c))
}

fn type_and_weights() -> impl Strategy<Value = (RootSystem, Weight, Weight)> {
    simple_type().prop_flat_map(|t| {
        let g = RootSystem::new(t);
        let d = g.ambient_dim();
        (Just(g), rational_weight(d), rational_weight(d))
    })
}

fn element(g: &RootSystem, word: &[usize]) -> WeylElement {
    word.iter()
        .fold(WeylElement::identity(g.ambient_dim()), |w, &i| w.times_simple(g, i % g.rank()))
}

/// A dominant weight with small Dynkin labels.
fn small_dominant(g: &RootSystem, labels: &[u8]) -> Weight {
    let labels: Vec<_> = labels.iter().map(|&l| frac(i64::from(l), 1)).collect();
    g.from_dynkin_labels(&labels[..g.rank()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn killing_form_is_invariant_under_simple_reflections((g, u, v) in type_and_weights()) {
        let before = g.killing_inner_product(&u, &v).unwrap();
        for i in 0..g.rank() {
            let s = WeylElement::simple_reflection(&g, i);
            let after = g.killing_inner_product(&s.apply(&u).unwrap(), &s.apply(&v).unwrap()).unwrap();
            prop_assert_eq!(&after, &before);
        }
    }

    #[test]
    fn weyl_elements_preserve_the_form(
        (g, u, v) in type_and_weights(),
        word in prop::collection::vec(0usize..8, 0..16),
    ) {
        let w = element(&g, &word);
        let before = g.killing_inner_product(&u, &v).unwrap();
        let after = g.killing_inner_product(&w.apply(&u).unwrap(), &w.apply(&v).unwrap()).unwrap();
        prop_assert_eq!(after, before);
        prop_assert!(w.permutes_roots(&g));
    }

    #[test]
    fn dominant_representative_is_dominant_and_conjugate(
        (g, u, _) in type_and_weights(),
    ) {
        let (mu, w) = dominant_representative(&g, &u, g.positive_system());
        prop_assert!(g.is_dominant(&mu, g.positive_system()).unwrap());
        prop_assert_eq!(w.apply(&u).unwrap(), mu);
    }

    #[test]
    fn freudenthal_multiplicities_sum_to_dimension_and_are_invariant(
        t in small_type(),
        labels in prop::collection::vec(0u8..=2, 3),
    ) {
        let g = RootSystem::new(t);
        let lambda = small_dominant(&g, &labels);
        let mults = freudenthal_multiplicities(&g, &lambda, 100_000).unwrap();
        let total: u64 = mults.values().sum();
        let dim = g.weyl_dimension(&lambda, g.positive_system()).unwrap();
        prop_assert_eq!(BigUint::from(total), dim);
        for i in 0..g.rank() {
            let s = WeylElement::simple_reflection(&g, i);
            for (mu, m) in &mults {
                prop_assert_eq!(mults.get(&s.apply(mu).unwrap()), Some(m));
            }
        }
    }

    #[test]
    fn branching_sum_rule(
        index in 0usize..64,
        labels in prop::collection::vec(0u8..=1, 3),
    ) {
        let small: Vec<_> = catalog()
            .into_iter()
            .filter(|e| e.g_type.rank() <= 3)
            .collect();
        let pair = small[index % small.len()].build().unwrap();
        let g = pair.g();
        let lambda = small_dominant(g, &labels);
        let weights = freudenthal_multiplicities(g, &lambda, 100_000).unwrap();
        let mut total = BigUint::from(0u32);
        for mu in weights.keys().filter(|mu| g.is_dominant(mu, pair.k_system()).unwrap()) {
            let m = branching_multiplicity(&pair, &lambda, mu, 100_000).unwrap();
            if m > 0 {
                total += g.weyl_dimension(mu, pair.k_system()).unwrap() * m;
            }
        }
        prop_assert_eq!(total, g.weyl_dimension(&lambda, g.positive_system()).unwrap());
    }
}

/// Every element of positive length in the Kostant set has a simple
/// reflection shortening it inside the set. Checked against brute-force
/// enumeration for all inner pairs and all Levi subsystems up to rank 3.
#[test]
fn kostant_set_is_a_lower_set_up_to_rank_3() {
    let mut systems: Vec<(RootSystem, PositiveSystem)> = Vec::new();
    for t in SimpleType::all_up_to(3) {
        let g = RootSystem::new(t);
        for mask in 0u32..(1 << g.rank()) {
            let simple: Vec<Weight> = (0..g.rank())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| g.simple_roots()[i].clone())
                .collect();
            let k = PositiveSystem::from_simple_roots(simple, g.ambient_dim()).unwrap();
            systems.push((g.clone(), k));
        }
    }
    for e in inner_pairs().into_iter().filter(|e| e.g_type.rank() <= 3) {
        let p = e.build().unwrap();
        systems.push((p.g().clone(), p.k_system().clone()));
    }

    for (g, k) in &systems {
        let set = kostant_set_bruteforce(g, k, 100_000).unwrap();
        let key = |w: &WeylElement| w.apply(g.weyl_vector()).unwrap();
        let members: HashSet<Weight> = set.iter().map(key).collect();
        let order = g.weyl_group_order() / k.weyl_group_order();
        assert_eq!(set.len() as u128, order, "{} / {:?}", g.simple_type(), k.simple_roots());
        for w in &set {
            let len = w.inversion_count(g);
            if len == 0 {
                continue;
            }
            let shorter = (0..g.rank()).any(|i| {
                let ws = w.times_simple(g, i);
                ws.inversion_count(g) == len - 1 && members.contains(&key(&ws))
            });
            assert!(shorter, "{}: no shortening of {:?}", g.simple_type(), w.word());
        }
    }
}
