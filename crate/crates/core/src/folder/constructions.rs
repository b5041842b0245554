//! Building new RCC loop folders from old ones: products with a group, semidirect
//! extensions, products of folders, and merging a generating family of invariant
//! transversals.

use std::sync::Arc;

use super::{is_invariant, is_transversal, validate_folder, LoopFolder, Transversal};
use crate::error::{Error, Result};
use crate::group::ops::generates;
use crate::group::product::{direct_product, semidirect_product, Action, Product};
use crate::group::set::ElementSet;
use crate::group::table::GroupTable;

fn require_rcc(f: &LoopFolder) -> Result<()> {
    debug_assert!(f.flags_consistent());
    if f.is_rcc() {
        Ok(())
    } else {
        Err(Error::PreconditionFailed("folder is not RCC".into()))
    }
}

/// `(P, A × B, S × R)` inside a product `P` of the two parent groups.
fn product_sets(p: &Product, a: &ElementSet, b: &ElementSet, s: &[usize], r: &[usize]) -> (ElementSet, Transversal) {
    let n = p.group.order();
    let h = ElementSet::from_members(n, a.iter().flat_map(|x| b.iter().map(move |y| p.pair(x, y))));
    let t = Transversal::new(s.iter().flat_map(|&x| r.iter().map(move |&y| p.pair(x, y))));
    (h, t)
}

/// `(G × Q, H × {1}, T × Q)`.
pub fn extend_direct(f: &LoopFolder, q: &Arc<GroupTable>) -> Result<LoopFolder> {
    extend_semidirect(f, q, &Action::trivial(f.group(), q))
}

/// `(G ⋉ Q, H ⋉ {1}, T ⋉ Q)` where `G` acts on `Q`. The result need not be faithful
/// even when the input is.
pub fn extend_semidirect(f: &LoopFolder, q: &Arc<GroupTable>, action: &Action) -> Result<LoopFolder> {
    require_rcc(f)?;
    let p = semidirect_product(f.group(), q, action)?;
    let all_q: Vec<usize> = q.elements().collect();
    let (h, t) = product_sets(&p, f.subgroup(), &ElementSet::trivial(q.order()), f.transversal(), &all_q);
    validate_folder(p.group, h, t)
}

/// For abelian `G`: the elements of `H ⋉ {1}` that commute with `{1} ⋉ Q`, which is
/// the core of `H ⋉ {1}` in `G ⋉ Q`. Returned as a subset of
/// `semidirect_product(g, q, action)`.
pub fn semidirect_core(g: &Arc<GroupTable>, h: &ElementSet, q: &Arc<GroupTable>, action: &Action) -> Result<ElementSet> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let n = g.order() * q.order();
    let m = q.order();
    // (h,1) commutes with (1,x) iff x^h = x
    Ok(ElementSet::from_members(n, h.iter().filter(|&x| action.acts_trivially(x)).map(|x| x * m)))
}

/// `(G_1 × G_2, H_1 × H_2, T_1 × T_2)`.
pub fn product_folder(f1: &LoopFolder, f2: &LoopFolder) -> Result<LoopFolder> {
    require_rcc(f1)?;
    require_rcc(f2)?;
    let p = direct_product(f1.group(), f2.group())?;
    let (h, t) = product_sets(&p, f1.subgroup(), f2.subgroup(), f1.transversal(), f2.transversal());
    validate_folder(p.group, h, t)
}

/// From `G`-invariant transversals `S_1, …, S_m` of `H` (each containing 1, jointly
/// generating `G`) and an abelian `Q = {q_1 = 1, …, q_n}` with `n ≥ m`, the transversal
/// `⋃_{i≤m} S_i × {q_i} ∪ ⋃_{j>m} S_1 × {q_j}` of `H × {1}` in `G × Q`, which is
/// `G × Q`-invariant and generating.
pub fn merge_transversals(
    g: &Arc<GroupTable>,
    h: &ElementSet,
    family: &[Transversal],
    q: &Arc<GroupTable>,
) -> Result<LoopFolder> {
    if !q.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if family.is_empty() {
        return Err(Error::FamilyDoesNotGenerate);
    }
    if q.order() < family.len() {
        return Err(Error::QTooSmall { q: q.order(), family: family.len() });
    }
    let h = h.clone().into_subgroup(g)?;
    for s in family {
        if !s.contains(0) || !is_transversal(g, &h, s) || !is_invariant(g, s) {
            return Err(Error::PreconditionFailed("family member is not a G-invariant transversal containing 1".into()));
        }
    }
    let union: Vec<usize> = family.iter().flat_map(|s| s.iter().copied()).collect();
    if !generates(g, &union) {
        return Err(Error::FamilyDoesNotGenerate);
    }
    let p = direct_product(g, q)?;
    let t = Transversal::new(q.elements().flat_map(|qj| {
        let s = family.get(qj).unwrap_or(&family[0]);
        let p = &p;
        s.iter().map(move |&x| p.pair(x, qj))
    }));
    let hq = ElementSet::from_members(p.group.order(), h.iter().map(|x| p.pair(x, 0)));
    let f = validate_folder(p.group, hq, t)?;
    if !f.is_rcc() || !f.is_generating() {
        return Err(Error::InternalTheoremViolation("merged transversal is not invariant and generating".into()));
    }
    Ok(f)
}
