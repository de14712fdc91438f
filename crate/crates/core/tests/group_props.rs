mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use qsdl_core::{Group, Permutation};

fn build(n: usize, gens: &[Vec<usize>]) -> Group {
    Group::new(n, gens.iter().map(|g| Permutation::from_images(g.clone()).unwrap()).collect()).unwrap()
}

fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

#[test]
fn corpus_orders_match_enumeration() {
    for (name, n, gens) in common::group_corpus() {
        let all = common::enumerate_elements(n, &gens);
        assert_eq!(build(n, &gens).order(), BigUint::from(all.len()), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_groups_match_enumeration(gens in (3usize..=7).prop_flat_map(|n| prop::collection::vec(perm(n), 1..=3))) {
        let n = gens[0].len();
        let all = common::enumerate_elements(n, &gens);
        let g = build(n, &gens);
        prop_assert_eq!(g.order(), BigUint::from(all.len()));
        for x in &all {
            prop_assert!(g.contains(&Permutation::from_images(x.clone()).unwrap()));
        }
    }

    #[test]
    fn generator_order_is_irrelevant(gens in prop::collection::vec(perm(8), 2..=4)) {
        let mut rev = gens.clone();
        rev.reverse();
        let (g, h) = (build(8, &gens), build(8, &rev));
        prop_assert_eq!(g.order(), h.order());
        for p in 0..8 {
            prop_assert_eq!(g.orbit(p).unwrap().elements, h.orbit(p).unwrap().elements);
        }
    }

    #[test]
    fn set_orbits_are_closed(gens in prop::collection::vec(perm(7), 1..=2), block in prop::collection::btree_set(0usize..7, 1..=3)) {
        let g = build(7, &gens);
        let block: Vec<usize> = block.into_iter().collect();
        let orbit = g.set_orbit(&block).unwrap();
        prop_assert!(orbit.contains(&block));
        prop_assert!(orbit.windows(2).all(|w| w[0] < w[1]));
        for s in &orbit {
            for x in g.generators() {
                prop_assert!(orbit.binary_search(&x.apply_set(s)).is_ok());
            }
        }
        prop_assert_eq!(g.order() % BigUint::from(orbit.len()), BigUint::from(0u32));
    }

    #[test]
    fn inverse_and_composition(a in perm(9), b in perm(9)) {
        let (p, q) = (Permutation::from_images(a).unwrap(), Permutation::from_images(b).unwrap());
        prop_assert!(p.then(&p.inverse()).is_identity());
        let pq = p.then(&q);
        for i in 0..9 {
            prop_assert_eq!(pq.apply(i), q.apply(p.apply(i)));
        }
    }
}
