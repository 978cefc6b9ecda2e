//! Randomized structural laws for groups generated by random permutations.

use std::collections::{BTreeSet, HashSet};

use hallcpi::config::Ctx;
use hallcpi::hall::{is_hall, sylow, PiSet};
use hallcpi::structure::{center, centralizer, derived_subgroup, normal_closure, normalizer};
use hallcpi::{Perm, PermGroup};
use proptest::prelude::*;

fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn arb_group(n: usize, max_gens: usize) -> impl Strategy<Value = PermGroup> {
    prop::collection::vec(arb_perm(n), 1..=max_gens).prop_map(move |g| PermGroup::new(n, g).unwrap())
}

/// Closure of the generators by breadth-first multiplication.
fn naive_elements(g: &PermGroup) -> HashSet<Perm> {
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue = vec![g.identity()];
    seen.insert(g.identity());
    while let Some(x) = queue.pop() {
        for s in g.generators() {
            let y = x.compose(s);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn order_matches_naive_closure(g in arb_group(6, 3)) {
        prop_assert_eq!(g.order_u128(), naive_elements(&g).len() as u128);
    }

    #[test]
    fn membership_matches_naive_closure(g in arb_group(6, 2), x in arb_perm(6)) {
        prop_assert_eq!(g.contains(&x), naive_elements(&g).contains(&x));
    }

    #[test]
    fn orbit_stabilizer(g in arb_group(8, 3), p in 0u32..8) {
        let orbit = g.orbit(p).unwrap();
        let stab = g.stabilizer(p).unwrap();
        prop_assert_eq!(orbit.len() as u128 * stab.order_u128(), g.order_u128());
        for s in stab.generators() {
            prop_assert_eq!(s.apply(p), p);
        }
    }

    #[test]
    fn orbits_partition_the_points(g in arb_group(9, 2)) {
        let mut all: Vec<u32> = g.orbits().into_iter().flatten().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..9).collect::<Vec<u32>>());
    }

    #[test]
    fn conjugate_groups_have_equal_order(g in arb_group(7, 2), x in arb_perm(7)) {
        let h = g.conjugate(&x);
        prop_assert_eq!(h.order_u128(), g.order_u128());
        for s in g.generators() {
            prop_assert!(h.contains(&s.conjugate(&x)));
        }
    }

    #[test]
    fn lagrange_for_joins(g in arb_group(7, 1), h in arb_group(7, 1)) {
        let j = g.join(&h);
        prop_assert!(j.is_subgroup(&g) && j.is_subgroup(&h));
        prop_assert_eq!(j.order_u128() % g.order_u128(), 0);
        prop_assert_eq!(j.order_u128() % h.order_u128(), 0);
    }

    #[test]
    fn derived_subgroup_and_normal_closure_are_normal(g in arb_group(6, 2), x in arb_perm(6)) {
        let d = derived_subgroup(&g);
        prop_assert!(d.is_normal_in(&g));
        prop_assert_eq!(g.order_u128() % d.order_u128(), 0);
        if g.contains(&x) {
            let n = normal_closure(&g, std::slice::from_ref(&x));
            prop_assert!(n.is_normal_in(&g) && n.contains(&x));
        }
    }

    #[test]
    fn normalizer_centralizer_center_agree_with_brute_force(g in arb_group(6, 2), h in arb_group(6, 1)) {
        let ctx = Ctx::default();
        let elems = naive_elements(&g);
        let hh = PermGroup::new(6, h.generators().iter().filter(|x| g.contains(x)).cloned().collect()).unwrap();
        let norm = normalizer(&g, &hh, &ctx).unwrap();
        let cent = centralizer(&g, &hh, &ctx).unwrap();
        let want_n = elems.iter().filter(|x| hh.generators().iter().all(|s| hh.contains(&s.conjugate(x)))).count();
        let want_c = elems
            .iter()
            .filter(|x| hh.generators().iter().all(|s| s.compose(x) == x.compose(s)))
            .count();
        prop_assert_eq!(norm.order_u128(), want_n as u128);
        prop_assert_eq!(cent.order_u128(), want_c as u128);
        let z = center(&g, &ctx).unwrap();
        let want_z = elems
            .iter()
            .filter(|x| g.generators().iter().all(|s| s.compose(x) == x.compose(s)))
            .count();
        prop_assert_eq!(z.order_u128(), want_z as u128);
    }

    #[test]
    fn sylow_subgroups_are_hall_for_one_prime(g in arb_group(7, 2)) {
        let ctx = Ctx::default();
        let primes: BTreeSet<u64> = g.order_factors().keys().copied().collect();
        for p in primes {
            let s = sylow(&g, p, &ctx).unwrap();
            prop_assert!(g.is_subgroup(&s));
            prop_assert!(is_hall(&g, &s, &PiSet::new([p]).unwrap()).unwrap());
        }
    }
}
