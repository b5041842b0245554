//! Structure of envelopes of RCC loops of order `pq`, via an intermediate subgroup
//! `H < K < G`.

use std::sync::Arc;

use serde::Serialize;

use crate::catalog::affine::affine_group;
use crate::error::{Error, Result};
use crate::folder::LoopFolder;
use crate::group::hom::GroupHomomorphism;
use crate::group::iso::{find_isomorphism, find_monomorphism};
use crate::group::lattice::all_subgroups;
use crate::group::ops::{centralizer, core, generated_subgroup, induced_subgroup, is_normal};
use crate::group::product::direct_product;
use crate::group::set::ElementSet;
use crate::group::sylow::is_prime;
use crate::group::table::{Elem, GroupTable};
use crate::catalog::named::cyclic;

/// A monomorphism `G → Aff(1, p)`, or `None`.
pub fn embed_in_affine(g: &Arc<GroupTable>, p: usize) -> Result<Option<GroupHomomorphism>> {
    if !is_prime(p) {
        return Err(Error::PreconditionFailed(format!("{p} is not prime")));
    }
    if (p * (p - 1)) % g.order() != 0 {
        return Ok(None);
    }
    let aff = Arc::new(affine_group(p)?.table);
    find_monomorphism(g, &aff)
}

/// Which structure theorem applies to one choice of `K`, and whether its conclusion was
/// confirmed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum PqVerdict {
    /// `K ⊴ G`, `H₁ = C = 1`, `K₁ < C_G(K₁)`: `G ≅ K × C_q` with `K ≤ Aff(1,p)`.
    DirectWithCq { confirmed: bool },
    /// `K ⊴ G`, `H₁ = 1`, `K₁ = C_G(K₁)`: `G ≤ Aff(1,p)`.
    AffineEmbedding { confirmed: bool },
    /// `K` not normal, `H₁ ≠ 1`, or `C ≠ 1` (with `K₁ < C_G(K₁)`): not covered.
    Unclassified,
}

/// The analysis for one intermediate subgroup `K` with `|G:K| = q`, `|K:H| = p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PqAnalysis {
    pub p: usize,
    pub q: usize,
    pub k: Vec<Elem>,
    /// `T₁ = T ∩ K`.
    pub t1: Vec<Elem>,
    /// `K₁ = ⟨T₁⟩`.
    pub k1: Vec<Elem>,
    /// `H₁ = H ∩ K₁`.
    pub h1: Vec<Elem>,
    /// `C = core_K(H)`.
    pub c: Vec<Elem>,
    pub k_normal: bool,
    pub k1_self_centralizing: bool,
    pub verdict: PqVerdict,
}

/// Every intermediate subgroup of an envelope of order `pq`, analyzed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PqReport {
    pub group_order: usize,
    pub loop_order: usize,
    pub analyses: Vec<PqAnalysis>,
}

fn core_in(g: &GroupTable, k: &ElementSet, h: &ElementSet) -> ElementSet {
    k.iter().fold(h.clone(), |acc, x| acc.intersect(&h.conjugate(g, x)))
}

/// Analyzes a faithful generating RCC folder of order `pq` (`p ≠ q` primes). Each
/// subgroup `K` with `H < K < G` and prime indices `|K:H|`, `|G:K|` is treated in the
/// orientation `|K:H| = p`, `|G:K| = q` it fixes; the sub-folder facts (`(K₁,H₁,T₁)` an
/// RCC folder of order `p`, `K₁` abelian, `K₁ ⊴ K`, `K = HK₁`, `H₁ ⊴ K`) are checked
/// for each, and the conclusion of an applicable structure theorem verified.
pub fn pq_structure_analysis(f: &LoopFolder, p: usize, q: usize) -> Result<PqReport> {
    if !is_prime(p) || !is_prime(q) || p == q {
        return Err(Error::PreconditionFailed("p and q must be distinct primes".into()));
    }
    if f.order() != p * q {
        return Err(Error::PreconditionFailed(format!("folder order {} is not {}", f.order(), p * q)));
    }
    if !f.is_rcc() || !f.is_faithful() || !f.is_generating() {
        return Err(Error::PreconditionFailed("folder must be RCC, faithful and generating".into()));
    }
    let g = f.group();
    let h = f.subgroup();
    let mut analyses = Vec::new();
    for k in all_subgroups(g)? {
        if k.len() == g.order() || k.len() == h.len() || !h.is_subset_of(&k) {
            continue;
        }
        let (a, b) = (k.len() / h.len(), g.order() / k.len());
        if (a, b) == (p, q) || (a, b) == (q, p) {
            analyses.push(analyze(g, f, k, a, b)?);
        }
    }
    if analyses.is_empty() {
        return Err(Error::NoIntermediateSubgroup);
    }
    Ok(PqReport { group_order: g.order(), loop_order: f.order(), analyses })
}

fn analyze(g: &Arc<GroupTable>, f: &LoopFolder, k: ElementSet, p: usize, q: usize) -> Result<PqAnalysis> {
    let h = f.subgroup();
    let fail = |what: &str| Error::InternalTheoremViolation(format!("order-pq sub-folder: {what} (K = {k:?})"));
    let t1: Vec<Elem> = f.transversal().iter().copied().filter(|&x| k.contains(x)).collect();
    let k1 = generated_subgroup(g, &t1);
    let h1 = h.intersect(&k1);
    let c = core_in(g, &k, h);
    // (K₁, H₁, T₁) is an RCC folder of order p
    if t1.len() != p || k1.len() != h1.len() * p {
        return Err(fail("T1 has the wrong size"));
    }
    let distinct_cosets = t1.iter().enumerate().all(|(i, &x)| t1[i + 1..].iter().all(|&y| !h1.contains(g.mul(x, g.inv(y)))));
    if !distinct_cosets {
        return Err(fail("T1 is not a transversal of H1 in K1"));
    }
    let t1_set = ElementSet::from_members(g.order(), t1.iter().copied());
    if !k.iter().all(|x| t1.iter().all(|&y| t1_set.contains(g.conj(y, x)))) {
        return Err(fail("T1 is not K-invariant"));
    }
    if k1.iter().any(|x| k1.iter().any(|y| g.mul(x, y) != g.mul(y, x))) {
        return Err(fail("K1 is not abelian"));
    }
    let normal_in_k = |s: &ElementSet| k.iter().all(|x| s.iter().all(|y| s.contains(g.conj(y, x))));
    if !normal_in_k(&k1) || !normal_in_k(&h1) {
        return Err(fail("K1 or H1 is not normal in K"));
    }
    if h.product(g, &k1) != k {
        return Err(fail("K != HK1"));
    }
    let k_normal = is_normal(g, &k);
    let k1_self_centralizing = centralizer(g, &k1) == k1;
    let verdict = if k_normal && h1.is_trivial() && k1_self_centralizing {
        let confirmed = embed_in_affine(g, p)?.is_some();
        if !confirmed {
            return Err(fail("G does not embed in Aff(1,p)"));
        }
        PqVerdict::AffineEmbedding { confirmed }
    } else if k_normal && h1.is_trivial() && c.is_trivial() {
        let (kt, _) = induced_subgroup(g, &k)?;
        let kt = Arc::new(kt);
        let kq = direct_product(&kt, &Arc::new(cyclic(q)?))?.group;
        let confirmed = find_isomorphism(g, &kq)?.is_some() && embed_in_affine(&kt, p)?.is_some();
        if !confirmed {
            return Err(fail("G is not K x C_q with K in Aff(1,p)"));
        }
        PqVerdict::DirectWithCq { confirmed }
    } else {
        PqVerdict::Unclassified
    };
    debug_assert!(core(g, h).is_trivial());
    Ok(PqAnalysis {
        p,
        q,
        k: k.members().to_vec(),
        t1,
        k1: k1.members().to_vec(),
        h1: h1.members().to_vec(),
        c: c.members().to_vec(),
        k_normal,
        k1_self_centralizing,
        verdict,
    })
}
