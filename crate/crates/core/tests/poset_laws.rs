use ordbase_core::density::verify_density_theorems;
use ordbase_core::poset::{
    compact_elements, is_debreu_upper_dense, is_directed, supremum, way_below_bruteforce, ElementSubset,
    FinitePoset, DEFAULT_EXHAUSTIVE_BOUND,
};
use ordbase_core::random::{random_conditionally_connected, random_poset};
use ordbase_core::topology::{
    lower_topology, mu_check, mu_from_downsets, order_from_topology, scott_topology, scott_topology_definitional,
    strict_multi_utility, theorem4_check,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poset(seed: u64, n: usize, prob: f64) -> FinitePoset {
    random_poset(&mut ChaCha8Rng::seed_from_u64(seed), n, prob)
}

/// Directed subsets by definition: nonempty and every pair has an upper
/// bound inside.
fn directed_masks(p: &FinitePoset) -> Vec<u64> {
    let n = p.len();
    (1u64..1 << n)
        .filter(|&m| {
            let ids: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
            ids.iter().all(|&a| ids.iter().all(|&b| ids.iter().any(|&c| p.leq(a, c) && p.leq(b, c))))
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_axioms(seed in any::<u64>(), n in 1usize..8, prob in 0.0f64..1.0) {
        let p = poset(seed, n, prob);
        for x in 0..n {
            prop_assert!(p.leq(x, x));
            for y in 0..n {
                prop_assert!(!(p.leq(x, y) && p.leq(y, x)) || x == y);
                for z in 0..n {
                    prop_assert!(!(p.leq(x, y) && p.leq(y, z)) || p.leq(x, z));
                }
            }
        }
    }

    #[test]
    fn directed_sets_contain_their_supremum(seed in any::<u64>(), n in 1usize..7, prob in 0.0f64..1.0) {
        let p = poset(seed, n, prob);
        let masks = directed_masks(&p);
        for m in 0u64..1 << n {
            let a = ElementSubset::from_mask(m);
            prop_assert_eq!(is_directed(&p, &a), masks.contains(&m));
        }
        for &m in &masks {
            let a = ElementSubset::from_mask(m);
            let top = a.iter().find(|&t| a.iter().all(|x| p.leq(x, t)));
            prop_assert!(top.is_some());
            prop_assert_eq!(supremum(&p, &a), top);
        }
    }

    #[test]
    fn way_below_is_leq(seed in any::<u64>(), n in 1usize..8, prob in 0.0f64..1.0) {
        let p = poset(seed, n, prob);
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(way_below_bruteforce(&p, x, y, DEFAULT_EXHAUSTIVE_BOUND).unwrap(), p.leq(x, y));
            }
        }
        prop_assert_eq!(compact_elements(&p).len(), n);
    }

    #[test]
    fn whole_poset_is_upper_dense(seed in any::<u64>(), n in 1usize..8, prob in 0.0f64..1.0) {
        let p = poset(seed, n, prob);
        prop_assert!(is_debreu_upper_dense(&p, &ElementSubset::full(n)).holds);
    }

    #[test]
    fn density_theorems_hold(seed in any::<u64>(), n in 1usize..8, prob in 0.0f64..1.0) {
        let p = poset(seed, n, prob);
        let r = verify_density_theorems(&p).unwrap();
        prop_assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn conditionally_connected_theorems_hold(seed in any::<u64>(), n in 1usize..9) {
        let p = random_conditionally_connected(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let r = verify_density_theorems(&p).unwrap();
        prop_assert_eq!(r.get("conditionally_connected").unwrap().holds, Some(true));
        prop_assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn scott_topology_recovers_the_order(seed in any::<u64>(), n in 1usize..7, prob in 0.0f64..1.0) {
        let p = poset(seed, n, prob);
        let s = scott_topology(&p);
        prop_assert!(s.is_topology());
        prop_assert_eq!(&s, &scott_topology_definitional(&p, DEFAULT_EXHAUSTIVE_BOUND).unwrap());
        prop_assert!(lower_topology(&p).is_coarser_than(&s));
        let q = order_from_topology(&s).unwrap();
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(q.leq(x, y), p.leq(x, y));
            }
        }
    }

    #[test]
    fn multi_utilities(seed in any::<u64>(), n in 1usize..8, prob in 0.0f64..1.0) {
        let p = poset(seed, n, prob);
        let f = mu_check(&p, &mu_from_downsets(&p)).unwrap();
        prop_assert!(f.multi_utility && f.lsc);
        let w = strict_multi_utility(&p);
        let f = mu_check(&p, &w).unwrap();
        prop_assert!(f.multi_utility && f.strict && f.lsc);
        prop_assert!(theorem4_check(&p, &w, DEFAULT_EXHAUSTIVE_BOUND).unwrap().all_pass());
    }
}
