//! Reference values for loops, loop folders, envelopes, the folder constructions and the
//! invariant-transversal search.

mod common;

use std::sync::Arc;

use common::{c3_wr_c2, d12, d8, d8_transversals, q8, s3};
use loopforge::catalog::{abelian, affine_group, cyclic, small_group_catalog};
use loopforge::folder::{
    derived_construction, envelope, envelope_roundtrip_check, extend_direct, extend_semidirect, is_invariant,
    is_invariant_under, loop_from_folder, merge_transversals, normalizer_factorization_check, product_folder,
    semidirect_core, validate_folder, LoopFolder, Transversal,
};
use loopforge::group::lattice::{all_subgroups, subgroups_up_to_conjugacy};
use loopforge::group::perm::cycle_notation;
use loopforge::group::{center, centralizer, normalizer, Action, ElementSet, GroupTable};
use loopforge::loops::{loop_isomorphic, LoopTable};
use loopforge::search::{
    abelian_h_invariance_criterion, brute_force_invariant_transversals, count_invariant_transversals,
    double_coset_transversal, enumerate_invariant_transversals, enumerate_invariant_transversals_with, felsch_criteria,
    SearchOptions,
};
use loopforge::Error;

/// `(S_3, ⟨(0 1)⟩, A_3)`.
fn s3_folder() -> LoopFolder {
    let m = s3();
    let h = m.sub(&[m.el("(0 1)")]);
    let a3 = m.sub(&[m.el("(0 1 2)")]);
    validate_folder(m.group.clone(), h, Transversal::new(a3.iter())).unwrap()
}

/// Every RCC folder over the catalog groups of order at most `max`, at most `per_pair`
/// per subgroup class.
fn sweep(max: usize, per_pair: usize) -> Vec<LoopFolder> {
    let mut out = Vec::new();
    for e in small_group_catalog(max).unwrap() {
        for h in subgroups_up_to_conjugacy(&e.group).unwrap() {
            for t in enumerate_invariant_transversals(&e.group, &h, per_pair).unwrap().transversals {
                out.push(validate_folder(e.group.clone(), h.clone(), t).unwrap());
            }
        }
    }
    out
}

/// An order-6 non-associative RCC loop: a generating folder over `C_3 ≀ C_2`.
fn order_six_envelope() -> LoopFolder {
    let m = c3_wr_c2();
    let h = m.sub(&[1]);
    let opts = SearchOptions { require_generating: true, ..SearchOptions::with_limit(1) };
    let t = enumerate_invariant_transversals_with(&m.group, &h, &opts).unwrap().transversals.remove(0);
    validate_folder(m.group.clone(), h, t).unwrap()
}

#[test]
fn cyclic_loop_translations_are_three_cycles() {
    let l = LoopTable::from_group(&cyclic(3).unwrap());
    for g in 1..3 {
        let r = l.right_translation(g);
        assert_eq!(cycle_notation(&r).matches('(').count(), 1);
        assert!((0..3).all(|x| r[x] != x));
    }
}

#[test]
fn every_order_four_loop_is_associative() {
    let mut count = 0;
    let mut rows = vec![vec![0, 1, 2, 3], vec![1, 0, 0, 0], vec![2, 0, 0, 0], vec![3, 0, 0, 0]];
    let cells: Vec<(usize, usize)> = (1..4).flat_map(|r| (1..4).map(move |c| (r, c))).collect();
    fn fill(rows: &mut Vec<Vec<usize>>, cells: &[(usize, usize)], k: usize, count: &mut usize) {
        if k == cells.len() {
            let l = LoopTable::from_rows(rows, None).unwrap();
            assert!(l.is_associative());
            *count += 1;
            return;
        }
        let (r, c) = cells[k];
        for v in 0..4 {
            if (0..c).all(|j| rows[r][j] != v) && (0..r).all(|i| rows[i][c] != v) {
                rows[r][c] = v;
                fill(rows, cells, k + 1, count);
            }
        }
        rows[r][c] = 0;
    }
    fill(&mut rows, &cells, 0, &mut count);
    assert_eq!(count, 4);
}

#[test]
fn a_loop_of_order_five_without_the_rcc_property() {
    // the first normalized order-5 Latin square that fails the right conjugacy closure
    let mut found = None;
    let cells: Vec<(usize, usize)> = (1..5).flat_map(|r| (1..5).map(move |c| (r, c))).collect();
    let mut rows: Vec<Vec<usize>> = (0..5).map(|r| (0..5).map(|c| if r == 0 { c } else if c == 0 { r } else { 0 }).collect()).collect();
    fn fill(rows: &mut Vec<Vec<usize>>, cells: &[(usize, usize)], k: usize, found: &mut Option<LoopTable>) {
        if found.is_some() {
            return;
        }
        if k == cells.len() {
            let l = LoopTable::from_rows(rows, None).unwrap();
            if l.rcc_violation().is_some() {
                *found = Some(l);
            }
            return;
        }
        let (r, c) = cells[k];
        for v in 0..5 {
            if (0..c).all(|j| rows[r][j] != v) && (0..r).all(|i| rows[i][c] != v) {
                rows[r][c] = v;
                fill(rows, cells, k + 1, found);
            }
        }
        rows[r][c] = 0;
    }
    fill(&mut rows, &cells, 0, &mut found);
    let l = found.expect("some order-5 loop is not RCC");
    assert!(!l.is_rcc());
    assert!(l.rcc_violation().is_some());
}

#[test]
fn the_order_six_rcc_loop_and_its_envelope() {
    let f = order_six_envelope();
    let l = loop_from_folder(&f);
    assert_eq!(l.order(), 6);
    assert!(l.is_rcc());
    assert!(!l.is_associative());
    assert_eq!(l.right_multiplication_group().unwrap().group.order(), 18);
    let e = envelope(&l).unwrap();
    assert_eq!(e.subgroup().len(), 3);
    assert!(e.is_faithful() && e.is_rcc() && e.is_generating());
    assert!(envelope_roundtrip_check(&f).unwrap());
}

#[test]
fn d8_folders() {
    let m = d8();
    let (h, [t1, t2]) = d8_transversals(&m);
    let out = enumerate_invariant_transversals(&m.group, &h, 0).unwrap();
    let mut expected = vec![t1.clone(), t2.clone()];
    expected.sort();
    assert_eq!(out.transversals, expected);
    let f1 = validate_folder(m.group.clone(), h.clone(), t1).unwrap();
    let f2 = validate_folder(m.group.clone(), h.clone(), t2).unwrap();
    for f in [&f1, &f2] {
        assert!(f.is_rcc() && f.is_faithful());
        assert!(!f.is_generating());
    }
    // T1 is the Klein four-group {1, t, sts, (ts)²}; T2 is the rotation subgroup ⟨st⟩
    let v4 = LoopTable::from_group(&abelian(&[2, 2]).unwrap());
    let c4 = LoopTable::from_group(&cyclic(4).unwrap());
    let (l1, l2) = (loop_from_folder(&f1), loop_from_folder(&f2));
    assert!(loop_isomorphic(&l1, &v4).unwrap());
    assert!(loop_isomorphic(&l2, &c4).unwrap());
    assert!(!loop_isomorphic(&l1, &l2).unwrap());
    // N(H) = H C_G(H), both of order 4
    assert_eq!(normalizer(&m.group, &h).len(), 4);
    assert_eq!(centralizer(&m.group, &h).len(), 4);
    assert!(normalizer_factorization_check(&f1).unwrap());
}

#[test]
fn merging_the_d8_transversals_gives_a_generating_envelope() {
    let m = d8();
    let (h, [t1, t2]) = d8_transversals(&m);
    let f = merge_transversals(&m.group, &h, &[t1, t2], &Arc::new(cyclic(2).unwrap())).unwrap();
    assert_eq!(f.group().order(), 16);
    assert_eq!(f.order(), 8);
    assert!(f.is_rcc() && f.is_generating() && f.is_faithful());
    assert!(envelope_roundtrip_check(&f).unwrap());
}

#[test]
fn quaternion_centre_has_no_folder() {
    let m = q8();
    let z = center(&m.group);
    assert!(enumerate_invariant_transversals(&m.group, &z, 0).unwrap().transversals.is_empty());
    // any transversal of the centre gives an unfaithful folder
    let t = Transversal::new(loopforge::group::right_cosets(&m.group, &z).unwrap().iter().map(|c| c[0]));
    let f = validate_folder(m.group.clone(), z.clone(), t).unwrap();
    assert!(!f.is_faithful() && !f.is_rcc());
    assert!(matches!(derived_construction(&m.group, &z), Err(Error::DerivedIntersectsH)));
    assert!(abelian_h_invariance_criterion(&m.group, &z).unwrap());
    let r = felsch_criteria(&m.group, &z, &z).unwrap();
    assert!(r.exists && r.all_agree());
}

#[test]
fn s3_folders() {
    let m = s3();
    let h = m.sub(&[m.el("(0 1)")]);
    let bad = Transversal::new([0, m.el("(0 1)"), m.el("(0 2)")]);
    assert!(matches!(validate_folder(m.group.clone(), h.clone(), bad), Err(Error::NotTransversal(_))));
    let f = s3_folder();
    assert!(f.is_rcc() && !f.is_generating());
    assert!(loop_isomorphic(&loop_from_folder(&f), &LoopTable::from_group(&cyclic(3).unwrap())).unwrap());
    let d = derived_construction(&m.group, &h).unwrap();
    assert_eq!(d.transversal(), f.transversal());
    assert!(d.is_rcc());
    assert_eq!(double_coset_transversal(&m.group, &h, &h).unwrap().len(), 2);
    let r = felsch_criteria(&m.group, &h, &h).unwrap();
    assert!(r.exists && r.all_agree());
    assert!(is_invariant_under(&m.group, &f.transversal().to_set(6), &h));
    assert!(abelian_h_invariance_criterion(&m.group, &h).unwrap());
}

#[test]
fn d12_and_the_nonabelian_subgroup() {
    let m = d12();
    let s = m.el("(0 1 2 3 4 5)");
    let t = m.el("(1 5)(2 4)");
    let h = m.sub(&[m.word(&[s, s]), t]);
    let s3 = m.word(&[s, s, s]);
    let count = count_invariant_transversals(&m.group, &h).unwrap();
    assert!(count.count >= 1);
    let all = enumerate_invariant_transversals(&m.group, &h, 0).unwrap();
    assert!(all.transversals.contains(&Transversal::new([0, s3])));
}

#[test]
fn affine_counts() {
    let a = affine_group(5).unwrap();
    let h = a.linear_subgroup(2).unwrap();
    assert_eq!(count_invariant_transversals(&a.table, &h).unwrap().count, 2);
}

#[test]
fn abelian_groups_count_every_transversal() {
    for e in small_group_catalog(16).unwrap().into_iter().filter(|e| e.group.is_abelian()) {
        for h in all_subgroups(&e.group).unwrap() {
            let index = e.order() / h.len();
            let expected = (h.len() as u128).pow(index as u32 - 1);
            assert_eq!(count_invariant_transversals(&e.group, &h).unwrap().count, expected, "{}", e.name);
            assert_eq!(brute_force_invariant_transversals(&e.group, &h).unwrap().len() as u128, expected);
        }
    }
}

#[test]
fn constructions_keep_the_rcc_property() {
    let f = s3_folder();
    let c2 = Arc::new(cyclic(2).unwrap());
    let e = extend_direct(&f, &c2).unwrap();
    assert_eq!((e.group().order(), e.order()), (12, 6));
    assert!(e.is_rcc());

    let p = product_folder(&f, &f).unwrap();
    assert_eq!((p.group().order(), p.order()), (36, 9));
    assert!(p.is_rcc());

    // C4 = ⟨h⟩ acting on C5 through x ↦ 2x; H = ⟨h²⟩, T = {1, h}
    let c4 = Arc::new(cyclic(4).unwrap());
    let c5 = Arc::new(cyclic(5).unwrap());
    let double: Vec<usize> = (0..5).map(|x| 2 * x % 5).collect();
    let action = Action::from_cyclic_generator(&c4, &c5, &double).unwrap();
    let h = ElementSet::from_members(4, [0, 2]);
    let base = validate_folder(c4.clone(), h.clone(), Transversal::new([0, 1])).unwrap();
    let s = extend_semidirect(&base, &c5, &action).unwrap();
    assert_eq!(s.group().order(), 20);
    assert!(s.is_rcc());
    assert!(semidirect_core(&c4, &h, &c5, &action).unwrap().is_trivial());
}

#[test]
fn sweep_invariants() {
    let folders = sweep(40, 8);
    assert!(folders.len() > 100);
    let c2 = Arc::new(cyclic(2).unwrap());
    for f in &folders {
        assert!(f.is_rcc());
        assert!(loop_from_folder(f).is_rcc());
        assert!(normalizer_factorization_check(f).unwrap());
        if f.group().order() <= 24 {
            assert_eq!(extend_direct(f, &c2).unwrap().is_faithful(), f.is_faithful());
            let l = loop_from_folder(f);
            assert!(envelope(&l).unwrap().is_faithful());
        }
    }
    let small: Vec<&LoopFolder> = folders.iter().filter(|f| f.group().order() <= 6).collect();
    for a in &small {
        for b in &small {
            let p = product_folder(a, b).unwrap();
            assert_eq!(p.is_faithful(), a.is_faithful() && b.is_faithful());
        }
    }
}

#[test]
fn group_tables_are_loops() {
    let g: GroupTable = s3().group.as_ref().clone();
    let l = LoopTable::from_group(&g);
    assert!(l.is_associative() && l.is_rcc());
    assert!(is_invariant(&g, &[0]));
}
