//! Normal complements of Sylow subgroups, and the order-`p³` argument.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::iso::find_isomorphism;
use crate::group::lattice::all_subgroups;
use crate::group::ops::{center, centralizer, derived_subgroup, induced_subgroup, is_normal, is_subgroup, normalizer};
use crate::group::product::quotient;
use crate::group::set::ElementSet;
use crate::group::sylow::{gcd, is_power_of, prime_divisors};
use crate::group::table::GroupTable;
use crate::search::enumerate_invariant_transversals;

/// For a Sylow subgroup `H ≤ Z(N_G(H))`, the normal subgroup `N` with `G = HN`,
/// `H ∩ N = 1` and `G/N ≅ H`.
///
/// For `H = G` the answer is `N = 1` without further conditions.
/// Such an `N` consists exactly of the elements of order prime to `p`, so that set is
/// the only candidate; it is checked in full. Not finding a complement is reported as
/// [`Error::InternalTheoremViolation`].
pub fn burnside_complement_check(g: &Arc<GroupTable>, h: &ElementSet) -> Result<ElementSet> {
    if h.parent_order() != g.order() || !(h.is_subgroup() || is_subgroup(g, h)) {
        return Err(Error::NotSubgroup);
    }
    let index = g.order() / h.len();
    if index == 1 {
        // H = G: the trivial subgroup is the complement whatever the centrality condition
        return Ok(ElementSet::trivial(g.order()).into_subgroup(g)?);
    }
    let p = match prime_divisors(h.len()).as_slice() {
        [] => return Ok(ElementSet::whole(g.order())),
        &[p] => p,
        _ => return Err(Error::PreconditionFailed("subgroup is not a p-group".into())),
    };
    if !is_power_of(h.len(), p) || gcd(h.len(), index) != 1 {
        return Err(Error::PreconditionFailed("subgroup is not a Sylow subgroup".into()));
    }
    if !h.is_subset_of(&centralizer(g, &normalizer(g, h))) {
        return Err(Error::PreconditionFailed("subgroup is not central in its normalizer".into()));
    }
    let n = ElementSet::from_members(g.order(), g.elements().filter(|&x| g.element_order(x) % p != 0));
    let fail = |why: &str| Error::InternalTheoremViolation(format!("no normal complement: {why}"));
    if n.len() != index || !is_subgroup(g, &n) || !is_normal(g, &n) {
        return Err(fail("the p'-elements do not form a normal subgroup of the index"));
    }
    let n = n.into_subgroup(g)?;
    if !n.intersect(h).is_trivial() || h.product(g, &n).len() != g.order() {
        return Err(fail("not a complement"));
    }
    let (q, _) = quotient(g, &n)?;
    let (h_table, _) = induced_subgroup(g, h)?;
    if find_isomorphism(&q, &Arc::new(h_table))?.is_none() {
        return Err(fail("quotient not isomorphic to the subgroup"));
    }
    Ok(n)
}

/// Outcome of [`p3_checks`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct P3Report {
    pub p: usize,
    /// `|Z(G)|`, which equals `|G′| = p`.
    pub center_order: usize,
    pub subgroups_checked: usize,
    pub transversals_checked: usize,
    /// Proper subgroups admitting a `G`-invariant transversal.
    pub subgroups_with_transversal: usize,
}

/// For a non-abelian group of order `p³`: checks `G′ = Z(G)` of order `p`, and that every
/// `G`-invariant transversal of every proper subgroup `H` contains `G′`, hence meets `H`
/// only in 1. A failed check is an [`Error::InternalTheoremViolation`].
pub fn p3_checks(g: &GroupTable) -> Result<P3Report> {
    let p = match prime_divisors(g.order()).as_slice() {
        &[p] if g.order() == p * p * p => p,
        _ => return Err(Error::PreconditionFailed("group order is not a prime cubed".into())),
    };
    if g.is_abelian() {
        return Err(Error::PreconditionFailed("group is abelian".into()));
    }
    let z = center(g);
    let d = derived_subgroup(g);
    if z != d || z.len() != p {
        return Err(Error::InternalTheoremViolation(format!("G' = {d:?}, Z(G) = {z:?}")));
    }
    let mut report = P3Report { p, center_order: z.len(), subgroups_checked: 0, transversals_checked: 0, subgroups_with_transversal: 0 };
    for h in all_subgroups(g)?.into_iter().filter(|h| h.len() < g.order()) {
        report.subgroups_checked += 1;
        let out = enumerate_invariant_transversals(g, &h, 0)?;
        if !out.is_complete() {
            return Err(Error::PreconditionFailed("search budget exhausted".into()));
        }
        if !out.transversals.is_empty() {
            report.subgroups_with_transversal += 1;
        }
        for t in &out.transversals {
            report.transversals_checked += 1;
            if !d.iter().all(|x| t.contains(x)) || !d.intersect(&h).is_trivial() {
                return Err(Error::InternalTheoremViolation(format!("transversal {t:?} of {h:?} misses G'")));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named::{cyclic, dicyclic, dihedral, heisenberg, symmetric};
    use crate::group::ops::generated_subgroup;
    use crate::group::sylow::sylow_subgroup;

    #[test]
    fn complements() {
        let c6 = Arc::new(cyclic(6).unwrap());
        let n = burnside_complement_check(&c6, &sylow_subgroup(&c6, 2)).unwrap();
        assert_eq!(n.len(), 3);
        let s3 = Arc::new(symmetric(3).unwrap());
        let t = s3.elements().find(|&x| s3.label(x) == "(0 1)").unwrap();
        let n = burnside_complement_check(&s3, &generated_subgroup(&s3, &[t])).unwrap();
        assert_eq!(n, derived_subgroup(&s3));
        let q8 = Arc::new(dicyclic(8).unwrap());
        assert!(burnside_complement_check(&q8, &ElementSet::whole(8)).unwrap().is_trivial());
    }

    #[test]
    fn complement_preconditions() {
        let s3 = Arc::new(symmetric(3).unwrap());
        // A3 is Sylow but not central in its normalizer S3
        assert!(matches!(burnside_complement_check(&s3, &derived_subgroup(&s3)), Err(Error::PreconditionFailed(_))));
        let c12 = Arc::new(cyclic(12).unwrap());
        let six = generated_subgroup(&c12, &[2]);
        assert!(matches!(burnside_complement_check(&c12, &six), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn order_p_cubed() {
        for g in [dihedral(8).unwrap(), dicyclic(8).unwrap(), heisenberg(3).unwrap()] {
            let r = p3_checks(&g).unwrap();
            assert_eq!(r.center_order, r.p);
        }
        let q8 = dicyclic(8).unwrap();
        // in Q8 every nontrivial subgroup contains G', so only H = 1 has a transversal
        assert_eq!(p3_checks(&q8).unwrap().subgroups_with_transversal, 1);
        assert!(matches!(p3_checks(&cyclic(8).unwrap()), Err(Error::PreconditionFailed(_))));
    }
}
