//! Loop folders `(G, H, T)`: validation, the loop on `T`, envelopes and the round trip
//! between them, and the `G′S` construction.

pub mod constructions;
pub mod io;

use std::ops::Deref;
use std::sync::Arc;

use serde::Serialize;

pub use constructions::{extend_direct, extend_semidirect, merge_transversals, product_folder, semidirect_core};

use crate::error::{Error, Result};
use crate::group::iso::extend_generator_map;
use crate::group::ops::{centralizer, core, derived_subgroup, distinct_conjugates, generates, is_subgroup, normalizer, right_coset_ids};
use crate::group::set::ElementSet;
use crate::group::table::{Elem, GroupTable};
use crate::loops::table::LoopTable;

/// A set of element indices kept sorted, so the identity (index 0) comes first when
/// present. Loop tables built from a transversal are indexed by this order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Transversal(Vec<Elem>);

impl Transversal {
    pub fn new(elements: impl IntoIterator<Item = Elem>) -> Self {
        let mut v: Vec<Elem> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Transversal(v)
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Elem> {
        self.0
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// Position of `x` in the sorted order (its index in the folder's loop).
    pub fn position(&self, x: Elem) -> Option<usize> {
        self.0.binary_search(&x).ok()
    }

    pub fn to_set(&self, order: usize) -> ElementSet {
        ElementSet::from_members(order, self.0.iter().copied())
    }
}

impl Deref for Transversal {
    type Target = [Elem];
    fn deref(&self) -> &[Elem] {
        &self.0
    }
}

/// Whether `t` meets every right coset of `h` exactly once.
pub fn is_transversal(g: &GroupTable, h: &ElementSet, t: &[Elem]) -> bool {
    if t.len() * h.len() != g.order() {
        return false;
    }
    let ids = right_coset_ids(g, h);
    let mut hit = vec![false; t.len()];
    t.iter().all(|&x| !std::mem::replace(&mut hit[ids[x]], true))
}

/// Whether `t^g = t` for all `g ∈ G`.
pub fn is_invariant(g: &GroupTable, t: &[Elem]) -> bool {
    let set = ElementSet::from_members(g.order(), t.iter().copied());
    is_invariant_under(g, &set, &ElementSet::whole(g.order()))
}

/// Whether `t^u = t` for all `u ∈ U`.
pub fn is_invariant_under(g: &GroupTable, t: &ElementSet, u: &ElementSet) -> bool {
    t.iter().all(|x| u.iter().all(|y| t.contains(g.conj(x, y))))
}

/// A validated loop folder `(G, H, T)`.
#[derive(Clone, Debug)]
pub struct LoopFolder {
    group: Arc<GroupTable>,
    subgroup: ElementSet,
    transversal: Transversal,
    rcc: bool,
    faithful: bool,
    generating: bool,
}

impl LoopFolder {
    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn subgroup(&self) -> &ElementSet {
        &self.subgroup
    }

    pub fn transversal(&self) -> &Transversal {
        &self.transversal
    }

    /// `|T|`.
    pub fn order(&self) -> usize {
        self.transversal.len()
    }

    pub fn is_rcc(&self) -> bool {
        self.rcc
    }

    pub fn is_faithful(&self) -> bool {
        self.faithful
    }

    pub fn is_generating(&self) -> bool {
        self.generating
    }

    /// Recomputes the cached flags and compares them.
    pub fn flags_consistent(&self) -> bool {
        let g = &self.group;
        self.rcc == is_invariant(g, &self.transversal)
            && self.faithful == core(g, &self.subgroup).is_trivial()
            && self.generating == generates(g, &self.transversal)
    }
}

/// Validates `(G, H, T)`: `H` a subgroup, `1 ∈ T`, and `T` a right transversal of every
/// conjugate `H^g`.
///
/// When `T` is `G`-invariant, checking `H` alone suffices: `Hg·t ↦ H·t^{g⁻¹}` carries
/// cosets of `H^g` to cosets of `H` and `T` onto itself.
pub fn validate_folder(g: Arc<GroupTable>, h: ElementSet, t: Transversal) -> Result<LoopFolder> {
    validate(g, h, t, true)
}

/// As [`validate_folder`] but always checks every conjugate of `H`.
pub fn validate_folder_exhaustive(g: Arc<GroupTable>, h: ElementSet, t: Transversal) -> Result<LoopFolder> {
    validate(g, h, t, false)
}

fn validate(g: Arc<GroupTable>, h: ElementSet, t: Transversal, shortcut: bool) -> Result<LoopFolder> {
    if h.parent_order() != g.order() || !(h.is_subgroup() || is_subgroup(&g, &h)) {
        return Err(Error::NotSubgroup);
    }
    let h = h.into_subgroup(&g)?;
    if t.iter().any(|&x| x >= g.order()) {
        return Err(Error::PreconditionFailed("transversal element out of range".into()));
    }
    if !t.contains(0) {
        return Err(Error::PreconditionFailed("the identity is not in T".into()));
    }
    let rcc = is_invariant(&g, &t);
    if rcc && shortcut {
        if !is_transversal(&g, &h, &t) {
            return Err(Error::NotTransversal(0));
        }
    } else {
        for (x, conj) in distinct_conjugates(&g, &h) {
            if !is_transversal(&g, &conj, &t) {
                return Err(Error::NotTransversal(x));
            }
        }
    }
    let faithful = core(&g, &h).is_trivial();
    let generating = generates(&g, &t);
    Ok(LoopFolder { group: g, subgroup: h, transversal: t, rcc, faithful, generating })
}

/// The loop on `T`: `t_1 ∗ t_2` is the element of `T` in the coset `H t_1 t_2`. Loop
/// element `i` is the `i`-th element of `T` in increasing index order.
pub fn loop_from_folder(f: &LoopFolder) -> LoopTable {
    let g = &f.group;
    let t = &f.transversal;
    let ids = right_coset_ids(g, &f.subgroup);
    let mut rep_of_coset = vec![usize::MAX; t.len()];
    for (i, &x) in t.iter().enumerate() {
        rep_of_coset[ids[x]] = i;
    }
    let n = t.len();
    let mut mul = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = rep_of_coset[ids[g.mul(t[a], t[b])]];
        }
    }
    let labels = t.iter().map(|&x| g.label(x).to_string()).collect();
    LoopTable::from_trusted(n, mul, labels)
}

/// The envelope `(RM(L), Stab_{RM}(1), R_L)`, always a faithful loop folder.
pub fn envelope(l: &LoopTable) -> Result<LoopFolder> {
    let rm = l.right_multiplication_group()?;
    let t = Transversal::new(rm.translation_index.iter().copied());
    validate_folder(rm.group, rm.stabilizer, t)
}

/// For a faithful folder with generating transversal: whether the envelope of its loop
/// is isomorphic to it via `Φ: R_{x_1}⋯R_{x_n} ↦ x_1⋯x_n`, with `Φ(H̃) = H` and
/// `Φ(T̃) = T`.
pub fn envelope_roundtrip_check(f: &LoopFolder) -> Result<bool> {
    if !f.faithful || !f.generating {
        return Err(Error::PreconditionFailed("folder must be faithful with a generating transversal".into()));
    }
    let l = loop_from_folder(f);
    let rm = l.right_multiplication_group()?;
    if rm.group.order() != f.group.order() {
        return Ok(false);
    }
    // R_{t_i} ↦ t_i on the generators, extended along the Cayley graph of RM(L)
    let gens: Vec<Elem> = rm.translation_index.clone();
    let images: Vec<Elem> = f.transversal.to_vec();
    let Some(phi) = extend_generator_map(&rm.group, &f.group, &gens, &images) else {
        return Ok(false);
    };
    if phi.iter().any(|&y| y == usize::MAX) {
        return Ok(false);
    }
    let h_image = rm.stabilizer.map(f.group.order(), |x| phi[x]);
    let t_image = rm.translation_set.map(f.group.order(), |x| phi[x]);
    Ok(h_image == f.subgroup && t_image == f.transversal.to_set(f.group.order()))
}

/// `(G, H, G′S)` for a transversal `S ∋ 1` of `HG′` in `G` (smallest index per coset);
/// needs `H ∩ G′ = 1`.
pub fn derived_construction(g: &Arc<GroupTable>, h: &ElementSet) -> Result<LoopFolder> {
    let d = derived_subgroup(g);
    if !h.intersect(&d).is_trivial() {
        return Err(Error::DerivedIntersectsH);
    }
    let hd = h.product(g, &d).into_subgroup(g)?;
    let ids = right_coset_ids(g, &hd);
    let mut s = vec![usize::MAX; g.order() / hd.len()];
    for x in g.elements() {
        if s[ids[x]] == usize::MAX {
            s[ids[x]] = x;
        }
    }
    let t = Transversal::new(d.iter().flat_map(|x| s.iter().map(move |&y| (x, y))).map(|(x, y)| g.mul(x, y)));
    validate_folder(g.clone(), h.clone(), t)
}

/// `N_G(H) = H·C_G(H)` for an RCC folder.
pub fn normalizer_factorization_check(f: &LoopFolder) -> Result<bool> {
    if !f.rcc {
        return Err(Error::PreconditionFailed("folder is not RCC".into()));
    }
    let g = &f.group;
    let n = normalizer(g, &f.subgroup);
    let hc = f.subgroup.product(g, &centralizer(g, &f.subgroup));
    Ok(n == hc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named::{cyclic, dicyclic, symmetric};
    use crate::group::ops::{center, generated_subgroup};

    fn s3() -> Arc<GroupTable> {
        Arc::new(symmetric(3).unwrap())
    }

    fn transposition(g: &GroupTable) -> Elem {
        g.elements().find(|&x| g.label(x) == "(0 1)").unwrap()
    }

    #[test]
    fn trivial_subgroup_folder_is_the_group() {
        let g = Arc::new(cyclic(4).unwrap());
        let f = validate_folder(g.clone(), ElementSet::trivial(4), Transversal::new(0..4)).unwrap();
        assert!(f.is_rcc() && f.is_faithful() && f.is_generating());
        let l = loop_from_folder(&f);
        assert_eq!(l.rows(), g.rows());
        assert!(envelope_roundtrip_check(&f).unwrap());
    }

    #[test]
    fn s3_non_transversal() {
        let g = s3();
        let s = transposition(&g);
        let h = generated_subgroup(&g, &[s]);
        let t02 = g.elements().find(|&x| g.label(x) == "(0 2)").unwrap();
        let err = validate_folder(g.clone(), h.clone(), Transversal::new([0, s, t02])).unwrap_err();
        assert!(matches!(err, Error::NotTransversal(_)));
        let a3 = derived_subgroup(&g);
        let f = validate_folder(g.clone(), h.clone(), Transversal::new(a3.iter())).unwrap();
        assert!(f.is_rcc() && f.is_faithful() && !f.is_generating());
        assert!(f.flags_consistent());
        assert!(normalizer_factorization_check(&f).unwrap());
        assert!(loop_from_folder(&f).is_associative());
    }

    #[test]
    fn derived_construction_cases() {
        let g = s3();
        let h = generated_subgroup(&g, &[transposition(&g)]);
        let f = derived_construction(&g, &h).unwrap();
        assert_eq!(f.transversal().to_set(6), derived_subgroup(&g));
        let q8 = Arc::new(dicyclic(8).unwrap());
        assert_eq!(derived_construction(&q8, &center(&q8)).unwrap_err(), Error::DerivedIntersectsH);
    }

    #[test]
    fn envelope_of_group_loop() {
        let g = cyclic(3).unwrap();
        let env = envelope(&LoopTable::from_group(&g)).unwrap();
        assert_eq!(env.group().order(), 3);
        assert!(env.subgroup().is_trivial());
        assert!(env.is_faithful());
    }
}
