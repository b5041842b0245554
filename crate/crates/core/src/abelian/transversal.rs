//! Generating transversals in abelian groups, and their lift from an abelian quotient
//! to an invariant generating transversal.
//!
//! Everything works inside one group table: the recursive constructions pass subgroups
//! `A` (the current ambient group) and `H ≤ A` as element sets.

use std::sync::Arc;

use super::decomposition::{complement_in, decompose_subgroup, require_abelian};
use crate::error::{Error, Result};
use crate::folder::{is_transversal, validate_folder, LoopFolder, Transversal};
use crate::group::ops::{centralizer, generated_subgroup, is_normal, is_subgroup, right_coset_ids};
use crate::group::product::quotient;
use crate::group::set::ElementSet;
use crate::group::sylow::{p_component, prime_divisors};
use crate::group::table::{Elem, GroupTable};

fn require_subgroup(g: &GroupTable, h: &ElementSet) -> Result<()> {
    if h.parent_order() == g.order() && is_subgroup(g, h) {
        Ok(())
    } else {
        Err(Error::NotSubgroup)
    }
}

fn generates_set(g: &GroupTable, t: &[Elem], a: &ElementSet) -> bool {
    generated_subgroup(g, t).len() == a.len()
}

/// `{1, g, …, g^{n/d − 1}}` for `G = ⟨g⟩` of order `n` (smallest-index generator) and a
/// proper subgroup `H` of order `d`.
pub fn generating_transversal_cyclic(g: &GroupTable, h: &ElementSet) -> Result<Transversal> {
    require_subgroup(g, h)?;
    if h.len() == g.order() {
        return Err(Error::NotProper);
    }
    let whole = ElementSet::whole(g.order());
    Ok(Transversal::new(cyclic_powers(g, &whole, h)?))
}

fn cyclic_powers(g: &GroupTable, a: &ElementSet, h: &ElementSet) -> Result<Vec<Elem>> {
    let n = a.len();
    let gen = a
        .iter()
        .find(|&x| g.element_order(x) == n)
        .ok_or_else(|| Error::PreconditionFailed("group is not cyclic".into()))?;
    Ok((0..n / h.len()).map(|k| g.pow(gen, k)).collect())
}

/// The prime `p` when `A` is a nontrivial `p`-group.
fn p_of(a: &ElementSet) -> Result<Option<usize>> {
    if a.len() == 1 {
        return Ok(None);
    }
    let ps = prime_divisors(a.len());
    if ps.len() != 1 {
        return Err(Error::NotPGroup);
    }
    Ok(Some(ps[0]))
}

/// The smallest-index `u ∈ H − {1}` whose cyclic subgroup is a direct factor of the
/// abelian `p`-group `A`. A cyclic subgroup of order `p^e` is a direct factor iff it is
/// pure, i.e. `u^{p^{e−1}}` is not a `p^e`-th power in `A`.
fn cyclic_factor_in(g: &GroupTable, a: &ElementSet, h: &ElementSet, p: usize) -> Option<Elem> {
    h.iter().filter(|&u| u != 0).find(|&u| {
        let pe = g.element_order(u);
        let socle = g.pow(u, pe / p);
        !a.iter().any(|x| g.pow(x, pe) == socle)
    })
}

/// `⟨u⟩`, a complement `G̃` of it in `A`, and `H̃ = G̃ ∩ H`.
fn split_off(g: &GroupTable, a: &ElementSet, h: &ElementSet, u: Elem) -> (ElementSet, ElementSet) {
    let cyc = generated_subgroup(g, &[u]);
    let rest = complement_in(g, a, &cyc);
    let rest_h = rest.intersect(h);
    (rest, rest_h)
}

fn p_rank(g: &GroupTable, a: &ElementSet) -> Result<usize> {
    Ok(decompose_subgroup(g, a)?.rank())
}

/// For an abelian `p`-group `G` and `H ≤ G` with `|G:H| > rk(G)`: a transversal
/// `T ∋ 1` of `H` generating `G`.
///
/// If `H` contains a cyclic direct factor `U = ⟨u⟩` of `G`, split `G = G̃ × U`,
/// `H = H̃ × U`, recurse on `(G̃, H̃)` and, since the result has more than `rk(G̃)`
/// non-identity elements, swap its first redundant element `t` for `tu`. Otherwise the
/// invariant-factor generators lie in distinct non-trivial cosets; take them and fill the
/// remaining cosets with their smallest elements.
pub fn generating_transversal_p_group(g: &GroupTable, h: &ElementSet) -> Result<Transversal> {
    require_subgroup(g, h)?;
    let whole = ElementSet::whole(g.order());
    require_abelian(g, &whole)?;
    let p = p_of(&whole)?;
    let rank = p.map_or(Ok(0), |_| p_rank(g, &whole))?;
    let index = g.order() / h.len();
    if index <= rank {
        return Err(Error::IndexTooSmall { index, rank });
    }
    let t = gen_p(g, &whole, h)?;
    if !generates_set(g, &t, &whole) || !is_transversal(g, h, &t) {
        return Err(Error::InternalTheoremViolation("constructed transversal does not generate".into()));
    }
    Ok(Transversal::new(t))
}

/// `A` an abelian p-group (or trivial), `H ≤ A`, `|A:H| > rk(A)`. Returns `T` with
/// `T[0] = 1`.
fn gen_p(g: &GroupTable, a: &ElementSet, h: &ElementSet) -> Result<Vec<Elem>> {
    let Some(p) = p_of(a)? else {
        return Ok(vec![0]);
    };
    if let Some(u) = cyclic_factor_in(g, a, h, p) {
        let (rest, rest_h) = split_off(g, a, h, u);
        let mut t = gen_p(g, &rest, &rest_h)?;
        // the first t_i lying in the span of the others
        let pos = (1..t.len())
            .find(|&i| {
                let others: Vec<Elem> = t.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
                generated_subgroup(g, &others).contains(t[i])
            })
            .ok_or_else(|| Error::InternalTheoremViolation("no redundant element in an oversized generating set".into()))?;
        t[pos] = g.mul(t[pos], u);
        return Ok(t);
    }
    let d = decompose_subgroup(g, a)?;
    if d.rank() == 1 {
        return cyclic_powers(g, a, h);
    }
    complete_transversal(g, a, h, &d.generators)
}

/// `{1} ∪ seeds`, completed with the smallest element of every coset of `H` in `A` not
/// yet met. The seeds must lie in distinct non-trivial cosets.
fn complete_transversal(g: &GroupTable, a: &ElementSet, h: &ElementSet, seeds: &[Elem]) -> Result<Vec<Elem>> {
    let ids = right_coset_ids(g, h);
    let mut used = vec![false; g.order()];
    used[ids[0]] = true;
    let mut t = vec![0];
    for &s in seeds {
        if std::mem::replace(&mut used[ids[s]], true) {
            return Err(Error::InternalTheoremViolation("factor generators share a coset".into()));
        }
        t.push(s);
    }
    for x in a.iter() {
        if !used[ids[x]] {
            used[ids[x]] = true;
            t.push(x);
        }
    }
    Ok(t)
}

/// For an abelian `p`-group `G` and `H ≤ G` with `|G:H| ≤ rk(G)`: a transversal `T ∋ 1`
/// such that `T − {1}` is a minimal generating set of `⟨T⟩`.
pub fn minimal_transversal_p_group(g: &GroupTable, h: &ElementSet) -> Result<Transversal> {
    require_subgroup(g, h)?;
    let whole = ElementSet::whole(g.order());
    require_abelian(g, &whole)?;
    let p = p_of(&whole)?;
    let rank = p.map_or(Ok(0), |_| p_rank(g, &whole))?;
    let index = g.order() / h.len();
    if index > rank && index > 1 {
        return Err(Error::IndexTooLarge { index, rank });
    }
    let t = min_p(g, &whole, h)?;
    let span = generated_subgroup(g, &t);
    if !is_transversal(g, h, &t) || p_rank(g, &span)? != t.len() - 1 {
        return Err(Error::InternalTheoremViolation("transversal is not a minimal generating set".into()));
    }
    Ok(Transversal::new(t))
}

fn min_p(g: &GroupTable, a: &ElementSet, h: &ElementSet) -> Result<Vec<Elem>> {
    if a.len() == h.len() {
        return Ok(vec![0]);
    }
    let p = p_of(a)?.expect("a proper subgroup lives in a nontrivial group");
    let rank = p_rank(g, a)?;
    let index = a.len() / h.len();
    let u = cyclic_factor_in(g, a, h, p)
        .ok_or_else(|| Error::InternalTheoremViolation("small index without a cyclic factor inside H".into()))?;
    let (rest, rest_h) = split_off(g, a, h, u);
    if index < rank {
        min_p(g, &rest, &rest_h)
    } else {
        gen_p(g, &rest, &rest_h)
    }
}

/// Per prime `p | |G|`: `(p, |O_p(G) : O_p(H)|)`.
fn sylow_indices(g: &GroupTable, h: &ElementSet) -> Vec<(usize, usize)> {
    prime_divisors(g.order())
        .into_iter()
        .map(|p| {
            let gp = p_component(g, p);
            let hp = gp.intersect(h);
            (p, gp.len() / hp.len())
        })
        .collect()
}

/// For abelian `G` and `H ≤ G` with `max_p |O_p(G) : O_p(H)| > rk(G)`: a generating
/// transversal `T ∋ 1`.
///
/// With `p` the prime attaining the maximum (smallest such `p`): a generating transversal
/// `T_1 = {1 = t_1, …, t_m}` of `H_p` in `G_p`, a minimal generating set `S` of the
/// `p′`-part `G̃` (`s_1 = 1`), `R = {t_i s_i : i ≤ k+1} ∪ {t_j : j > k+1}` a generating
/// transversal of `K = H_p × G̃`, and `T = VR` for `V ∋ 1` the smallest representatives
/// of `H\K`.
pub fn generating_transversal_abelian(g: &GroupTable, h: &ElementSet) -> Result<Transversal> {
    require_subgroup(g, h)?;
    let whole = ElementSet::whole(g.order());
    require_abelian(g, &whole)?;
    let rank = super::abelian_rank(g)?;
    let indices = sylow_indices(g, h);
    let max_index = indices.iter().map(|&(_, i)| i).max().unwrap_or(1);
    if max_index <= rank {
        return Err(Error::ConditionFails { max_index, rank });
    }
    let (p, _) = *indices.iter().find(|&&(_, i)| i == max_index).expect("maximum is attained");
    let gp = p_component(g, p);
    let hp = gp.intersect(h);
    let t1 = gen_p(g, &gp, &hp)?;
    // the p'-part and a minimal generating set of it, prime by prime
    let rest = ElementSet::from_members(g.order(), g.elements().filter(|&x| g.element_order(x) % p != 0));
    let mut s: Vec<Elem> = Vec::new();
    for q in prime_divisors(rest.len()) {
        let d = decompose_subgroup(g, &p_component(g, q))?;
        for (i, &a) in d.generators.iter().enumerate() {
            if i < s.len() {
                s[i] = g.mul(s[i], a);
            } else {
                s.push(a);
            }
        }
    }
    let k = s.len();
    let mut r: Vec<Elem> = Vec::with_capacity(t1.len());
    for (i, &t) in t1.iter().enumerate() {
        let si = if i == 0 || i > k { 0 } else { s[i - 1] };
        r.push(g.mul(t, si));
    }
    let kk = hp.product(g, &rest).into_subgroup(g)?;
    let ids = right_coset_ids(g, h);
    let mut seen = vec![false; g.order()];
    let mut v = Vec::new();
    for x in kk.iter() {
        if !std::mem::replace(&mut seen[ids[x]], true) {
            v.push(x);
        }
    }
    let t: Vec<Elem> = v.iter().flat_map(|&a| r.iter().map(move |&b| (a, b))).map(|(a, b)| g.mul(a, b)).collect();
    if !is_transversal(g, h, &t) || !generates_set(g, &t, &whole) {
        return Err(Error::InternalTheoremViolation("constructed transversal is not a generating transversal".into()));
    }
    Ok(Transversal::new(t))
}

/// For `Q ⊴ G` with `G/Q` abelian, `H ∩ Q = 1` and the Sylow-index condition on
/// `(G/Q, HQ/Q)`: the folder `(G, H, Q·T̂)` where `T̂` lifts a generating transversal of
/// `HQ/Q` in `G/Q` (smallest representative per coset, so `1 ∈ T̂`). The folder is RCC
/// and generating; it is faithful whenever `C_H(Q) = 1`.
pub fn lift_generating_transversal_from_quotient(g: &Arc<GroupTable>, h: &ElementSet, q: &ElementSet) -> Result<LoopFolder> {
    require_subgroup(g, h)?;
    require_subgroup(g, q)?;
    if !is_normal(g, q) {
        return Err(Error::PreconditionFailed("Q is not normal in G".into()));
    }
    if !h.intersect(q).is_trivial() {
        return Err(Error::PreconditionFailed("H meets Q nontrivially".into()));
    }
    let (gq, proj) = quotient(g, q)?;
    if !gq.is_abelian() {
        return Err(Error::PreconditionFailed("G/Q is not abelian".into()));
    }
    let hq = proj.image_set(h);
    let tq = generating_transversal_abelian(&gq, &hq)?;
    let mut rep = vec![usize::MAX; gq.order()];
    for x in g.elements() {
        if rep[proj.apply(x)] == usize::MAX {
            rep[proj.apply(x)] = x;
        }
    }
    let hat: Vec<Elem> = tq.iter().map(|&c| rep[c]).collect();
    let t = Transversal::new(q.iter().flat_map(|a| hat.iter().map(move |&b| (a, b))).map(|(a, b)| g.mul(a, b)));
    let f = validate_folder(g.clone(), h.clone(), t)?;
    if !f.is_rcc() || !f.is_generating() {
        return Err(Error::InternalTheoremViolation("lifted transversal is not invariant and generating".into()));
    }
    Ok(f)
}

/// [`lift_generating_transversal_from_quotient`] with `Q = G′`.
pub fn lift_generating_transversal_over_derived(g: &Arc<GroupTable>, h: &ElementSet) -> Result<LoopFolder> {
    lift_generating_transversal_from_quotient(g, h, &crate::group::ops::derived_subgroup(g))
}

/// Whether `C_H(Q) = 1`, which makes the lifted folder faithful.
pub fn centralizer_in_h_trivial(g: &GroupTable, h: &ElementSet, q: &ElementSet) -> bool {
    centralizer(g, q).intersect(h).is_trivial()
}
