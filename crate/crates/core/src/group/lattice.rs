//! Subgroup enumeration: the full lattice, representatives up to conjugacy, and
//! abelian subgroups.

use std::collections::HashSet;

use super::ops::{centralizer, extend_closure_from, generated_subgroup};
use super::set::ElementSet;
use super::table::{Elem, GroupTable};
use crate::error::{Error, Result};

/// Subgroups above this count abort enumeration.
pub const DEFAULT_SUBGROUP_LIMIT: usize = 100_000;

/// Every subgroup of `G`, sorted by (order, member list).
///
/// Every subgroup is a join of cyclic subgroups, so growing each known subgroup by one
/// cyclic subgroup at a time, starting from the trivial one, reaches all of them.
pub fn all_subgroups(g: &GroupTable) -> Result<Vec<ElementSet>> {
    all_subgroups_bounded(g, DEFAULT_SUBGROUP_LIMIT)
}

pub fn all_subgroups_bounded(g: &GroupTable, limit: usize) -> Result<Vec<ElementSet>> {
    let cyclic = cyclic_generators(g);
    grow(g, limit, |s| cyclic.iter().copied().filter(|&x| !s.contains(x)).collect())
}

/// Abelian subgroups, sorted by (order, member list): grown by adjoining centralizing
/// elements, which keeps every intermediate subgroup abelian.
pub fn abelian_subgroups(g: &GroupTable) -> Result<Vec<ElementSet>> {
    let cyclic = cyclic_generators(g);
    grow(g, DEFAULT_SUBGROUP_LIMIT, |s| {
        let c = centralizer(g, s);
        cyclic.iter().copied().filter(|&x| c.contains(x) && !s.contains(x)).collect()
    })
}

/// One representative per conjugacy class of subgroups: the first in (order, members)
/// order.
pub fn subgroups_up_to_conjugacy(g: &GroupTable) -> Result<Vec<ElementSet>> {
    Ok(conjugacy_representatives(g, all_subgroups(g)?))
}

pub fn abelian_subgroups_up_to_conjugacy(g: &GroupTable) -> Result<Vec<ElementSet>> {
    Ok(conjugacy_representatives(g, abelian_subgroups(g)?))
}

/// Keeps the first member of each conjugacy class of the (sorted) input.
pub fn conjugacy_representatives(g: &GroupTable, subgroups: Vec<ElementSet>) -> Vec<ElementSet> {
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut out = Vec::new();
    for h in subgroups {
        if seen.contains(&h) {
            continue;
        }
        for x in g.elements() {
            seen.insert(h.conjugate(g, x));
        }
        out.push(h);
    }
    out
}

/// One generator per cyclic subgroup (the smallest index).
fn cyclic_generators(g: &GroupTable) -> Vec<Elem> {
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut out = Vec::new();
    for x in 1..g.order() {
        if seen.insert(generated_subgroup(g, &[x])) {
            out.push(x);
        }
    }
    out
}

fn grow(g: &GroupTable, limit: usize, extensions: impl Fn(&ElementSet) -> Vec<Elem>) -> Result<Vec<ElementSet>> {
    let trivial = ElementSet::trivial(g.order());
    let mut found: HashSet<ElementSet> = HashSet::new();
    found.insert(trivial.clone());
    let mut frontier = vec![(trivial, Vec::<Elem>::new())];
    while let Some((s, gens)) = frontier.pop() {
        for x in extensions(&s) {
            let mut next_gens = gens.clone();
            next_gens.push(x);
            let next = extend_closure_from(g, &s, &next_gens);
            if found.insert(next.clone()) {
                if found.len() > limit {
                    return Err(Error::OrderBoundExceeded(limit));
                }
                frontier.push((next, next_gens));
            }
        }
    }
    let mut all: Vec<ElementSet> = found.into_iter().collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members().cmp(b.members())));
    Ok(all)
}
