//! Existence of transversals of `H\G` invariant under a subgroup `U ≤ H`
//! (`(U, H, G)`-systems): five equivalent conditions, evaluated independently.

use serde::Serialize;

use super::{enumerate_invariant_systems, require_subgroup, SearchOptions};
use crate::error::{Error, Result};
use crate::folder::{is_invariant_under, is_transversal, Transversal};
use crate::group::ops::centralizer;
use crate::group::set::ElementSet;
use crate::group::table::{Elem, GroupTable};

/// One representative (the smallest index) of every double coset `HgU`, in increasing
/// order.
pub fn double_coset_transversal(g: &GroupTable, h: &ElementSet, u: &ElementSet) -> Result<Vec<Elem>> {
    require_subgroup(g, h)?;
    require_subgroup(g, u)?;
    let mut seen = vec![false; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if seen[x] {
            continue;
        }
        reps.push(x);
        for a in h.iter() {
            let ax = g.mul(a, x);
            for b in u.iter() {
                seen[g.mul(ax, b)] = true;
            }
        }
    }
    Ok(reps)
}

/// The conditions (a)–(e) for a chain `U ≤ H ≤ G`:
/// (a) a `U`-invariant transversal of `H\G` exists;
/// (b) `g ∈ H·C_G(U ∩ H^g)` for all `g`;
/// (c) the same for the double-coset representatives `s`;
/// (d) for every `g` some `h ∈ H` has `x^h = x^g` on `U^{g⁻¹} ∩ H`;
/// (e) the same for the representatives `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FelschReport {
    pub exists: bool,
    /// Whether the search behind `exists` ran to completion.
    pub search_complete: bool,
    pub cond_b: bool,
    pub cond_c: bool,
    pub cond_d: bool,
    pub cond_e: bool,
    /// A `U`-invariant transversal built from representatives `s* ∈ HsU` centralising
    /// `U ∩ H^{s*}` and their `U`-conjugates.
    pub witness: Option<Transversal>,
}

impl FelschReport {
    pub fn all_agree(&self) -> bool {
        let a = self.exists;
        [self.cond_b, self.cond_c, self.cond_d, self.cond_e].iter().all(|&c| c == a)
    }
}

/// `g ∈ H·C_G(U ∩ H^g)`.
fn in_h_times_centralizer(g: &GroupTable, h: &ElementSet, u: &ElementSet, x: Elem) -> bool {
    let c = centralizer(g, &u.intersect(&h.conjugate(g, x)));
    // x = h·c  ⟺  h⁻¹x ∈ C for some h ∈ H
    h.iter().any(|y| c.contains(g.mul(g.inv(y), x)))
}

/// Some `h ∈ H` with `y^h = y^x` for all `y ∈ U^{x⁻¹} ∩ H`.
fn conjugation_matched_in_h(g: &GroupTable, h: &ElementSet, u: &ElementSet, x: Elem) -> bool {
    let dom = u.conjugate(g, g.inv(x)).intersect(h);
    h.iter().any(|k| dom.iter().all(|y| g.conj(y, k) == g.conj(y, x)))
}

/// Evaluates (a)–(e) for `U ≤ H ≤ G`; (a) by exhaustive search. Fails with
/// [`Error::InternalTheoremViolation`] if a completed search disagrees with the other
/// conditions.
pub fn felsch_criteria(g: &GroupTable, h: &ElementSet, u: &ElementSet) -> Result<FelschReport> {
    felsch_criteria_with(g, h, u, &SearchOptions::with_limit(1))
}

pub fn felsch_criteria_with(g: &GroupTable, h: &ElementSet, u: &ElementSet, opts: &SearchOptions) -> Result<FelschReport> {
    require_subgroup(g, h)?;
    require_subgroup(g, u)?;
    if !u.is_subset_of(h) {
        return Err(Error::ChainViolated);
    }
    let reps = double_coset_transversal(g, h, u)?;
    let cond_b = g.elements().all(|x| in_h_times_centralizer(g, h, u, x));
    let cond_c = reps.iter().all(|&s| in_h_times_centralizer(g, h, u, s));
    let cond_d = g.elements().all(|x| conjugation_matched_in_h(g, h, u, x));
    let cond_e = reps.iter().all(|&s| conjugation_matched_in_h(g, h, u, s));
    let opts = SearchOptions { limit: 1, require_generating: false, ..opts.clone() };
    let search = enumerate_invariant_systems(g, h, u, &opts)?;
    let exists = !search.transversals.is_empty();
    let search_complete = exists || !search.budget_exhausted;
    let witness = if cond_c { Some(witness_system(g, h, u, &reps)?) } else { None };
    let report = FelschReport { exists, search_complete, cond_b, cond_c, cond_d, cond_e, witness };
    if search_complete && !report.all_agree() {
        return Err(Error::InternalTheoremViolation(format!("invariant-system criteria disagree: {report:?}")));
    }
    Ok(report)
}

/// For each double coset `HsU` the smallest `s* ∈ HsU` with `s* ∈ C_G(U ∩ H^{s*})`;
/// the union of their `U`-conjugates.
fn witness_system(g: &GroupTable, h: &ElementSet, u: &ElementSet, reps: &[Elem]) -> Result<Transversal> {
    let mut t = Vec::new();
    for &s in reps {
        let mut double: Vec<Elem> = h.iter().flat_map(|a| u.iter().map(move |b| (a, b))).map(|(a, b)| g.mul(g.mul(a, s), b)).collect();
        double.sort_unstable();
        double.dedup();
        let star = double
            .into_iter()
            .find(|&x| centralizer(g, &u.intersect(&h.conjugate(g, x))).contains(x))
            .ok_or_else(|| Error::InternalTheoremViolation("no centralising representative in a double coset".into()))?;
        t.extend(u.iter().map(|y| g.conj(star, y)));
    }
    let t = Transversal::new(t);
    let set = t.to_set(g.order());
    if !is_transversal(g, h, &t) || !is_invariant_under(g, &set, u) {
        return Err(Error::InternalTheoremViolation("witness is not an invariant transversal".into()));
    }
    Ok(t)
}

/// For abelian `H`: an `H`-invariant transversal exists iff `g ∈ C_G(H ∩ H^g)` for all
/// `g`.
pub fn abelian_h_invariance_criterion(g: &GroupTable, h: &ElementSet) -> Result<bool> {
    require_subgroup(g, h)?;
    if h.iter().any(|a| h.iter().any(|b| g.mul(a, b) != g.mul(b, a))) {
        return Err(Error::NotAbelian);
    }
    Ok(g.elements().all(|x| centralizer(g, &h.intersect(&h.conjugate(g, x))).contains(x)))
}
