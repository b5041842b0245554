//! Structural invariants checked on randomly chosen groups, subgroups and transversals.

use std::sync::Arc;

use proptest::prelude::*;

use loopforge::abelian::{abelian_rank, generating_transversal_abelian};
use loopforge::catalog::named::abelian;
use loopforge::catalog::{cyclic_extension, entries_of_order, extension_data, small_group_catalog, CatalogEntry};
use loopforge::conjecture::transfer_map;
use loopforge::folder::io::{format_folder, parse_folder_spec};
use loopforge::folder::{
    envelope_roundtrip_check, is_invariant, is_transversal, loop_from_folder, validate_folder, Transversal,
};
use loopforge::group::iso::find_isomorphism;
use loopforge::group::ops::{generated_subgroup, generates, is_normal, right_cosets};
use loopforge::group::sylow::{p_component, prime_divisors};
use loopforge::group::{ElementSet, GroupTable};
use loopforge::loops::io::{format_loop, parse_loop};
use loopforge::search::{brute_force_invariant_transversals, count_invariant_transversals, enumerate_invariant_transversals};

fn catalog_up_to(n: usize) -> Vec<CatalogEntry> {
    small_group_catalog(n).unwrap()
}

/// A catalog group of order at most `max` and a subgroup generated by up to two random
/// elements.
fn group_and_subgroup(max: usize) -> impl Strategy<Value = (Arc<GroupTable>, ElementSet)> {
    let groups = catalog_up_to(max);
    (0..groups.len(), any::<[usize; 2]>(), 0..3usize).prop_map(move |(i, seeds, k)| {
        let g = groups[i].group.clone();
        let gens: Vec<usize> = seeds[..k].iter().map(|s| s % g.order()).collect();
        let h = generated_subgroup(&g, &gens);
        (g, h)
    })
}

/// Relabels a group table by a permutation fixing the identity.
fn relabel(g: &GroupTable, perm: &[usize]) -> GroupTable {
    let n = g.order();
    let mut inv = vec![0; n];
    for (x, &y) in perm.iter().enumerate() {
        inv[y] = x;
    }
    let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| perm[g.mul(inv[a], inv[b])]).collect()).collect();
    GroupTable::from_table(&rows, None).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transversal_is_sorted_and_deduplicated(v in proptest::collection::vec(0usize..50, 0..20)) {
        let t = Transversal::new(v.clone());
        prop_assert!(t.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(v.iter().all(|&x| t.contains(x)));
        prop_assert_eq!(Transversal::new(t.iter().rev().copied()), t);
    }

    #[test]
    fn exact_cover_matches_brute_force((g, h) in group_and_subgroup(16)) {
        let fast = enumerate_invariant_transversals(&g, &h, 0).unwrap();
        prop_assert!(fast.is_complete());
        prop_assert_eq!(&fast.transversals, &brute_force_invariant_transversals(&g, &h).unwrap());
        let count = count_invariant_transversals(&g, &h).unwrap();
        prop_assert_eq!(count.count, fast.transversals.len() as u128);
    }

    #[test]
    fn enumerated_transversals_are_invariant((g, h) in group_and_subgroup(24)) {
        let out = enumerate_invariant_transversals(&g, &h, 50).unwrap();
        for t in &out.transversals {
            prop_assert!(t.contains(0));
            prop_assert!(is_transversal(&g, &h, t));
            prop_assert!(is_invariant(&g, t));
        }
    }

    #[test]
    fn folders_and_loops_survive_text_round_trips((g, h) in group_and_subgroup(24)) {
        let out = enumerate_invariant_transversals(&g, &h, 5).unwrap();
        for t in out.transversals {
            let f = validate_folder(g.clone(), h.clone(), t).unwrap();
            let spec = parse_folder_spec(&format_folder("g.grp", &f)).unwrap();
            prop_assert_eq!(spec.group_path, "g.grp");
            prop_assert_eq!(&spec.subgroup, &h.members().to_vec());
            prop_assert_eq!(&spec.transversal, &f.transversal().to_vec());
            let l = loop_from_folder(&f);
            prop_assert_eq!(parse_loop(&format_loop(&l)).unwrap().rows(), l.rows());
            prop_assert!(l.is_rcc());
            if f.is_faithful() && f.is_generating() {
                prop_assert!(envelope_roundtrip_check(&f).unwrap());
            }
        }
    }

    #[test]
    fn transfer_is_a_homomorphism(
        (g, h) in group_and_subgroup(24),
        picks in proptest::collection::vec(any::<usize>(), 24),
    ) {
        prop_assume!(h.iter().all(|a| h.iter().all(|b| g.mul(a, b) == g.mul(b, a))));
        // any choice of one element per right coset, the identity for H itself
        let cosets = right_cosets(&g, &h).unwrap();
        let t = Transversal::new(cosets.iter().zip(&picks).map(|(c, &k)| if c.contains(&0) { 0 } else { c[k % c.len()] }));
        let tau = transfer_map(&g, &h, &t).unwrap();
        prop_assert!(tau.is_homomorphism());
        prop_assert!(tau.values().iter().all(|&v| h.contains(v)));
    }

    #[test]
    fn relabelled_groups_are_isomorphic(i in 0usize..40, seed in any::<u64>()) {
        let groups = catalog_up_to(24);
        let g = groups[i % groups.len()].group.clone();
        let mut perm: Vec<usize> = (1..g.order()).collect();
        // deterministic shuffle from the seed
        let mut s = seed;
        for k in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(k, (s >> 33) as usize % (k + 1));
        }
        perm.insert(0, 0);
        let h = Arc::new(relabel(&g, &perm));
        let f = find_isomorphism(&g, &h).unwrap().expect("relabelling is an isomorphism");
        prop_assert!(f.check() && f.is_bijective());
    }

    #[test]
    fn generating_transversals_in_abelian_groups(
        factors in proptest::collection::vec(prop_oneof![Just(2usize), Just(3), Just(4), Just(5), Just(9)], 1..4),
        seeds in proptest::collection::vec(any::<usize>(), 0..3),
    ) {
        prop_assume!(factors.iter().product::<usize>() <= 256);
        let g = abelian(&factors).unwrap();
        let gens: Vec<usize> = seeds.iter().map(|s| s % g.order()).collect();
        let h = generated_subgroup(&g, &gens);
        let rank = abelian_rank(&g).unwrap();
        let sylow_index = prime_divisors(g.order())
            .into_iter()
            .map(|p| {
                let gp = p_component(&g, p);
                gp.len() / gp.intersect(&h).len()
            })
            .max()
            .unwrap_or(1);
        prop_assume!(sylow_index > rank);
        let t = generating_transversal_abelian(&g, &h).unwrap();
        prop_assert!(t.contains(0) && is_transversal(&g, &h, &t) && generates(&g, &t));
    }

    #[test]
    fn cyclic_extensions_contain_the_base_with_prime_index(n in 1usize..=12, which in any::<usize>()) {
        for base in entries_of_order(n).unwrap() {
            for p in [2, 3] {
                let data = extension_data(&base.group, p);
                let (sigma, z) = &data[which % data.len()];
                let g = cyclic_extension(&base.group, p, sigma, *z).unwrap();
                prop_assert_eq!(g.order(), n * p);
                let n_set = ElementSet::from_members(g.order(), 0..n);
                prop_assert!(is_normal(&g, &n_set));
            }
        }
    }
}
