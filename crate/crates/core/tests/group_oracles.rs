//! Reference values for the group layer: closure, cosets, classes, products, quotients,
//! ranks, isomorphisms and the named constructors.

mod common;

use std::sync::Arc;

use common::{d12, d8, q8, s3};
use loopforge::catalog::{abelian, affine_group, cyclic, dicyclic, small_group_catalog, FiniteField};
use loopforge::group::iso::find_isomorphism;
use loopforge::group::ops::{conjugacy_classes, right_cosets};
use loopforge::group::rank::brute_force_rank;
use loopforge::group::sylow::{p_component, sylow_subgroup};
use loopforge::group::{
    center, centralizer, core, derived_subgroup, direct_product, normalizer, quotient, rank, semidirect_product,
    Action, ElementSet, GroupTable,
};
use loopforge::Error;

/// Calls `visit` on every `n × n` Latin square whose first row and column are `0..n`,
/// stopping as soon as it returns `true`.
fn first_normalized_latin_square(n: usize, visit: &mut dyn FnMut(&[Vec<usize>]) -> bool) -> Option<Vec<Vec<usize>>> {
    fn fill(rows: &mut Vec<Vec<usize>>, cell: usize, n: usize, visit: &mut dyn FnMut(&[Vec<usize>]) -> bool) -> bool {
        if cell == n * n {
            return visit(rows);
        }
        let (r, c) = (cell / n, cell % n);
        if r == 0 || c == 0 {
            return fill(rows, cell + 1, n, visit);
        }
        for v in 0..n {
            if (0..c).all(|k| rows[r][k] != v) && (0..r).all(|k| rows[k][c] != v) {
                rows[r][c] = v;
                if fill(rows, cell + 1, n, visit) {
                    return true;
                }
            }
        }
        rows[r][c] = usize::MAX;
        false
    }
    let mut rows: Vec<Vec<usize>> =
        (0..n).map(|r| (0..n).map(|c| if r == 0 { c } else if c == 0 { r } else { usize::MAX }).collect()).collect();
    fill(&mut rows, 0, n, visit).then_some(rows)
}

fn is_associative(rows: &[Vec<usize>]) -> bool {
    let n = rows.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| rows[rows[a][b]][c] == rows[a][rows[b][c]])))
}

#[test]
fn a_nonassociative_latin_square_is_rejected() {
    let has_inverses = |rows: &[Vec<usize>]| (0..rows.len()).all(|a| (0..rows.len()).any(|b| rows[a][b] == 0 && rows[b][a] == 0));
    let square = first_normalized_latin_square(5, &mut |rows| has_inverses(rows) && !is_associative(rows))
        .expect("order 5 has one");
    assert!(matches!(GroupTable::from_table(&square, None), Err(Error::NotAssociative(..))));
}

#[test]
fn s3_from_generators_round_trips_through_its_table() {
    let m = s3();
    assert_eq!(m.order(), 6);
    let again = GroupTable::from_table(&m.group.rows(), Some(m.group.labels().to_vec())).unwrap();
    assert_eq!(&again, m.group.as_ref());
}

#[test]
fn d8_presentation() {
    let m = d8();
    assert_eq!(m.order(), 8);
    let (s, t) = (m.el("(0 1)(2 3)"), m.el("(1 2)"));
    let g = &m.group;
    assert_eq!(g.element_order(s), 2);
    assert_eq!(g.element_order(t), 2);
    assert_eq!(g.element_order(g.mul(s, t)), 4);
    assert_eq!(m.sub(&[s]).len(), 2);
    assert!(core(g, &m.sub(&[s])).is_trivial());
}

#[test]
fn d12_subgroups_centre_and_derived_subgroup() {
    let m = d12();
    let g = &m.group;
    let s = m.el("(0 1 2 3 4 5)");
    let t = m.el("(1 5)(2 4)");
    let s2 = g.mul(s, s);
    let s3 = g.mul(s2, s);
    assert_eq!(m.sub(&[s2, t]).len(), 6);
    assert_eq!(center(g), m.sub(&[s3]));
    assert_eq!(centralizer(g, &ElementSet::whole(12)), m.sub(&[s3]));
    assert!(conjugacy_classes(g).iter().any(|c| c.members() == [s3]));
    assert_eq!(derived_subgroup(g), m.sub(&[s2]));
    assert_eq!(derived_subgroup(g).len(), 3);
    let (qt, _) = quotient(g, &m.sub(&[s2])).unwrap();
    assert_eq!(qt.order(), 4);
}

#[test]
fn s3_cosets_classes_normalizers() {
    let m = s3();
    let g = &m.group;
    let h = m.sub(&[m.el("(0 1)")]);
    let cosets = right_cosets(g, &h).unwrap();
    assert_eq!(cosets.len(), 3);
    assert!(cosets.iter().all(|c| c.len() == 2));
    let mut sizes: Vec<usize> = conjugacy_classes(g).iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 2, 3]);
    assert_eq!(normalizer(g, &h).len(), 2);
    let a3 = m.sub(&[m.el("(0 1 2)")]);
    assert_eq!(sylow_subgroup(g, 3), a3);
    let (qt, _) = quotient(g, &a3).unwrap();
    assert!(find_isomorphism(&qt, &Arc::new(cyclic(2).unwrap())).unwrap().is_some());
}

#[test]
fn quaternion_centre() {
    for g in [q8().group, Arc::new(dicyclic(8).unwrap())] {
        let z = center(&g);
        assert_eq!(z.len(), 2);
        assert_eq!(core(&g, &z), z);
        assert_eq!(derived_subgroup(&g), z);
    }
}

#[test]
fn products_and_semidirect_products() {
    let c2 = Arc::new(cyclic(2).unwrap());
    let c3 = Arc::new(cyclic(3).unwrap());
    let c4 = Arc::new(cyclic(4).unwrap());
    let c5 = Arc::new(cyclic(5).unwrap());
    let c6 = Arc::new(cyclic(6).unwrap());
    assert!(find_isomorphism(&direct_product(&c2, &c3).unwrap().group, &c6).unwrap().is_some());
    assert_eq!(direct_product(&c2, &d8().group).unwrap().group.order(), 16);

    // C2 acting on C3 by inversion
    let inv: Vec<usize> = (0..3).map(|x| (3 - x) % 3).collect();
    let s = semidirect_product(&c2, &c3, &Action::from_cyclic_generator(&c2, &c3, &inv).unwrap()).unwrap();
    assert!(find_isomorphism(&s.group, &s3().group).unwrap().is_some());

    // C4 acting on C5 through x ↦ 2x
    let double: Vec<usize> = (0..5).map(|x| 2 * x % 5).collect();
    let s = semidirect_product(&c4, &c5, &Action::from_cyclic_generator(&c4, &c5, &double).unwrap()).unwrap();
    let aff = Arc::new(affine_group(5).unwrap().table);
    assert!(find_isomorphism(&s.group, &aff).unwrap().is_some());
}

#[test]
fn ranks() {
    let v4 = abelian(&[2, 2]).unwrap();
    assert_eq!(rank(&v4), 2);
    assert_eq!(brute_force_rank(&v4), 2);
    let c6 = direct_product(&Arc::new(cyclic(2).unwrap()), &Arc::new(cyclic(3).unwrap())).unwrap().group;
    assert_eq!(rank(&c6), 1);
    assert_eq!(rank(&abelian(&[4, 2]).unwrap()), 2);
    assert_eq!(brute_force_rank(&abelian(&[4, 2]).unwrap()), 2);
}

#[test]
fn sylow_parts_of_c12() {
    let g = cyclic(12).unwrap();
    let (o2, o3) = (p_component(&g, 2), p_component(&g, 3));
    assert_eq!((o2.len(), o3.len()), (4, 3));
    assert!(o2.iter().any(|x| g.element_order(x) == 4));
}

#[test]
fn suzuki_field_automorphism_squares_to_squaring() {
    let f = FiniteField::with_modulus(2, 3, vec![1, 1, 0, 1]).unwrap();
    for x in f.elements() {
        let pi = f.suzuki_pi(x).unwrap();
        assert_eq!(pi, f.pow(x, 4));
        assert_eq!(f.suzuki_pi(pi).unwrap(), f.mul(x, x));
    }
}

#[test]
fn affine_groups() {
    let a3 = Arc::new(affine_group(3).unwrap().table);
    assert!(find_isomorphism(&a3, &s3().group).unwrap().is_some());
    for q in [3, 4, 5, 7, 8, 9] {
        assert_eq!(affine_group(q).unwrap().table.order(), q * (q - 1));
    }
}

#[test]
fn catalog_contents() {
    let cat = small_group_catalog(20).unwrap();
    assert_eq!(cat.iter().filter(|e| e.order() == 8).count(), 5);
    let aff = Arc::new(affine_group(5).unwrap().table);
    assert!(cat.iter().filter(|e| e.order() == 20).any(|e| find_isomorphism(&e.group, &aff).unwrap().is_some()));
    let names: Vec<&str> = cat.iter().map(|e| e.name.as_str()).collect();
    assert!(names.contains(&"Q8") && names.contains(&"A4") && names.contains(&"Aff(1,5)"));
}
