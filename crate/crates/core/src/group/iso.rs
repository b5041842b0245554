//! Isomorphism and monomorphism search by backtracking over generator images.

use std::sync::Arc;

use super::hom::GroupHomomorphism;
use super::ops::{conjugacy_classes, generators_of};
use super::set::ElementSet;
use super::table::{Elem, GroupTable, DEFAULT_MAX_ORDER};
use crate::error::{Error, Result};

/// Per-element invariant preserved by isomorphisms: (element order, class size).
pub(crate) fn signatures(g: &GroupTable) -> Vec<(usize, usize)> {
    let mut class_size = vec![0; g.order()];
    for c in conjugacy_classes(g) {
        for x in c.iter() {
            class_size[x] = c.len();
        }
    }
    let orders = g.element_orders();
    (0..g.order()).map(|x| (orders[x], class_size[x])).collect()
}

fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v
}

/// Cheap necessary condition for `G1 ≅ G2`.
pub fn same_signature(g1: &GroupTable, g2: &GroupTable) -> bool {
    g1.order() == g2.order()
        && g1.is_abelian() == g2.is_abelian()
        && sorted(&signatures(g1)) == sorted(&signatures(g2))
}

/// An isomorphism `G1 → G2`, or `None`. Deterministic: generators of `G1` are fixed and
/// candidate images tried in increasing index order.
pub fn find_isomorphism(g1: &Arc<GroupTable>, g2: &Arc<GroupTable>) -> Result<Option<GroupHomomorphism>> {
    if g1.order() > DEFAULT_MAX_ORDER || g2.order() > DEFAULT_MAX_ORDER {
        return Err(Error::OrderBoundExceeded(DEFAULT_MAX_ORDER));
    }
    if g1.order() != g2.order() || g1.is_abelian() != g2.is_abelian() {
        return Ok(None);
    }
    let (s1, s2) = (signatures(g1), signatures(g2));
    if sorted(&s1) != sorted(&s2) {
        return Ok(None);
    }
    let gens = generators_of(g1, &ElementSet::whole(g1.order()));
    let candidates: Vec<Vec<Elem>> =
        gens.iter().map(|&x| g2.elements().filter(|&y| s2[y] == s1[x]).collect()).collect();
    Ok(search(g1, g2, &gens, &candidates).map(|img| GroupHomomorphism::new_trusted(g1.clone(), g2.clone(), img)))
}

/// An injective homomorphism `G1 → G2`, or `None`.
pub fn find_monomorphism(g1: &Arc<GroupTable>, g2: &Arc<GroupTable>) -> Result<Option<GroupHomomorphism>> {
    if g1.order() > DEFAULT_MAX_ORDER || g2.order() > DEFAULT_MAX_ORDER {
        return Err(Error::OrderBoundExceeded(DEFAULT_MAX_ORDER));
    }
    if g2.order() % g1.order() != 0 {
        return Ok(None);
    }
    let (o1, o2) = (g1.element_orders(), g2.element_orders());
    let gens = generators_of(g1, &ElementSet::whole(g1.order()));
    let candidates: Vec<Vec<Elem>> =
        gens.iter().map(|&x| g2.elements().filter(|&y| o2[y] == o1[x]).collect()).collect();
    Ok(search(g1, g2, &gens, &candidates).map(|img| GroupHomomorphism::new_trusted(g1.clone(), g2.clone(), img)))
}

/// Backtracks over images of `gens`; returns the full injective image list on success.
fn search(g1: &GroupTable, g2: &GroupTable, gens: &[Elem], candidates: &[Vec<Elem>]) -> Option<Vec<Elem>> {
    let mut images = Vec::with_capacity(gens.len());
    descend(g1, g2, gens, candidates, &mut images)
}

fn descend(
    g1: &GroupTable,
    g2: &GroupTable,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    images: &mut Vec<Elem>,
) -> Option<Vec<Elem>> {
    let k = images.len();
    if k == gens.len() {
        return extend_generator_map(g1, g2, gens, images);
    }
    for &y in &candidates[k] {
        images.push(y);
        if extend_generator_map(g1, g2, &gens[..=k], images).is_some() {
            if let Some(done) = descend(g1, g2, gens, candidates, images) {
                return Some(done);
            }
        }
        images.pop();
    }
    None
}

/// Extends `gens[i] ↦ images[i]` along the Cayley graph of `⟨gens⟩`, checking that the
/// extension is a well-defined injective homomorphism. Returns the image list (with
/// `usize::MAX` outside the subgroup).
pub(crate) fn extend_generator_map(g1: &GroupTable, g2: &GroupTable, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
    let mut img = vec![usize::MAX; g1.order()];
    let mut used = vec![false; g2.order()];
    img[0] = 0;
    used[0] = true;
    let mut queue = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g1.mul(x, s);
            let expected = g2.mul(img[x], t);
            if img[y] == usize::MAX {
                if used[expected] {
                    return None;
                }
                used[expected] = true;
                img[y] = expected;
                queue.push(y);
            } else if img[y] != expected {
                return None;
            }
        }
    }
    Some(img)
}
