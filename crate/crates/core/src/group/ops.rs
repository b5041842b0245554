//! Subgroup machinery: closure, cosets, conjugacy, centralizers, cores, commutators.

use super::set::{is_subgroup_of, ElementSet};
use super::table::{Elem, GroupTable};
use crate::error::{Error, Result};

/// Smallest subgroup containing `seed`.
pub fn generated_subgroup(g: &GroupTable, seed: &[Elem]) -> ElementSet {
    let mut mask = vec![false; g.order()];
    mask[0] = true;
    extend_closure(g, &mut mask, seed)
}

/// `⟨base, extra⟩` where `base` is already a subgroup.
pub fn join(g: &GroupTable, base: &ElementSet, extra: &[Elem]) -> ElementSet {
    let mut mask = base.mask().to_vec();
    let gens: Vec<Elem> = generators_of(g, base).into_iter().chain(extra.iter().copied()).collect();
    extend_closure(g, &mut mask, &gens)
}

/// `⟨gens⟩` for a generating list `gens` that already generates `base`; the closure
/// starts from `base` to save work.
pub(crate) fn extend_closure_from(g: &GroupTable, base: &ElementSet, gens: &[Elem]) -> ElementSet {
    let mut mask = base.mask().to_vec();
    extend_closure(g, &mut mask, gens)
}

fn extend_closure(g: &GroupTable, mask: &mut [bool], gens: &[Elem]) -> ElementSet {
    let mut queue: Vec<Elem> = mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &s in gens {
            let y = g.mul(x, s);
            if !mask[y] {
                mask[y] = true;
                queue.push(y);
            }
        }
    }
    ElementSet::subgroup_from_mask(mask.to_vec())
}

/// A small generating set of a subgroup, picked greedily (largest element order first,
/// ties by smallest index).
pub fn generators_of(g: &GroupTable, h: &ElementSet) -> Vec<Elem> {
    let orders: Vec<usize> = h.iter().map(|x| g.element_order(x)).collect();
    let mut by_order: Vec<(usize, Elem)> = h.iter().zip(orders).map(|(x, o)| (o, x)).collect();
    by_order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut gens = Vec::new();
    let mut current = ElementSet::trivial(g.order());
    for (_, x) in by_order {
        if current.len() == h.len() {
            break;
        }
        if !current.contains(x) {
            gens.push(x);
            current = generated_subgroup(g, &gens);
        }
    }
    gens
}

pub fn is_subgroup(g: &GroupTable, s: &ElementSet) -> bool {
    is_subgroup_of(g, s)
}

pub fn is_normal(g: &GroupTable, h: &ElementSet) -> bool {
    h.iter().all(|x| g.elements().all(|y| h.contains(g.conj(x, y))))
}

fn require_subgroup(g: &GroupTable, h: &ElementSet) -> Result<()> {
    if h.is_subgroup() || is_subgroup_of(g, h) {
        Ok(())
    } else {
        Err(Error::NotSubgroup)
    }
}

/// Maps each element to the index of its right coset `Hx` in [`right_cosets`] order.
pub fn right_coset_ids(g: &GroupTable, h: &ElementSet) -> Vec<usize> {
    let mut id = vec![usize::MAX; g.order()];
    let mut next = 0;
    for x in g.elements() {
        if id[x] == usize::MAX {
            for y in h.iter() {
                id[g.mul(y, x)] = next;
            }
            next += 1;
        }
    }
    id
}

/// The right cosets `Hx`, the coset `H` first, each block sorted, blocks ordered by
/// their smallest element.
pub fn right_cosets(g: &GroupTable, h: &ElementSet) -> Result<Vec<Vec<Elem>>> {
    require_subgroup(g, h)?;
    let ids = right_coset_ids(g, h);
    let count = g.order() / h.len();
    let mut blocks = vec![Vec::with_capacity(h.len()); count];
    for x in g.elements() {
        blocks[ids[x]].push(x);
    }
    Ok(blocks)
}

/// Conjugacy classes ordered by smallest member; `{1}` comes first.
pub fn conjugacy_classes(g: &GroupTable) -> Vec<ElementSet> {
    orbits_under_conjugation(g, &ElementSet::whole(g.order()))
}

/// Orbits of `G` under conjugation by the elements of `by`, ordered by smallest member.
pub fn orbits_under_conjugation(g: &GroupTable, by: &ElementSet) -> Vec<ElementSet> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for x in g.elements() {
        if seen[x] {
            continue;
        }
        let mut mask = vec![false; g.order()];
        for u in by.iter() {
            let y = g.conj(x, u);
            mask[y] = true;
            seen[y] = true;
        }
        out.push(ElementSet::from_members(g.order(), mask.iter().enumerate().filter(|p| *p.1).map(|p| p.0)));
    }
    out
}

/// `C_G(S) = {g : gs = sg for all s ∈ S}`.
pub fn centralizer(g: &GroupTable, s: &ElementSet) -> ElementSet {
    let mask = g.elements().map(|x| s.iter().all(|y| g.mul(x, y) == g.mul(y, x))).collect();
    ElementSet::subgroup_from_mask(mask)
}

pub fn center(g: &GroupTable) -> ElementSet {
    centralizer(g, &ElementSet::whole(g.order()))
}

/// `N_G(H) = {g : H^g = H}`.
pub fn normalizer(g: &GroupTable, h: &ElementSet) -> ElementSet {
    let mask = g.elements().map(|x| h.iter().all(|y| h.contains(g.conj(y, x)))).collect();
    ElementSet::subgroup_from_mask(mask)
}

/// `core_G(H)`, the intersection of all conjugates of `H`.
pub fn core(g: &GroupTable, h: &ElementSet) -> ElementSet {
    let mask = g.elements().map(|x| h.contains(x) && g.elements().all(|y| h.contains(g.conj(x, y)))).collect();
    ElementSet::subgroup_from_mask(mask)
}

/// `G' = ⟨[a, b] : a, b ∈ G⟩`.
pub fn derived_subgroup(g: &GroupTable) -> ElementSet {
    let mut comms = vec![false; g.order()];
    for a in g.elements() {
        for b in g.elements() {
            comms[g.commutator(a, b)] = true;
        }
    }
    let seed: Vec<Elem> = (0..g.order()).filter(|&x| comms[x]).collect();
    generated_subgroup(g, &seed)
}

/// The distinct conjugates of a subgroup, each paired with its smallest conjugator.
pub fn distinct_conjugates(g: &GroupTable, h: &ElementSet) -> Vec<(Elem, ElementSet)> {
    let mut out: Vec<(Elem, ElementSet)> = Vec::new();
    for x in g.elements() {
        let c = h.conjugate(g, x);
        if !out.iter().any(|(_, d)| *d == c) {
            out.push((x, c));
        }
    }
    out
}

/// The subgroup `S` as a group table in its own right, with `embedding[i]` the element
/// of `G` sitting at index `i` (members in increasing order, so the identity stays 0).
pub fn induced_subgroup(g: &GroupTable, s: &ElementSet) -> Result<(GroupTable, Vec<Elem>)> {
    require_subgroup(g, s)?;
    let emb: Vec<Elem> = s.members().to_vec();
    let mut local = vec![usize::MAX; g.order()];
    for (i, &x) in emb.iter().enumerate() {
        local[x] = i;
    }
    let n = emb.len();
    let mut mul = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = local[g.mul(emb[a], emb[b])];
        }
    }
    let labels = emb.iter().map(|&x| g.label(x).to_string()).collect();
    Ok((GroupTable::from_trusted(n, mul, labels), emb))
}

/// Whether `⟨set⟩ = G`.
pub fn generates(g: &GroupTable, set: &[Elem]) -> bool {
    generated_subgroup(g, set).len() == g.order()
}
