//! Frobenius groups: detection, the equivalent characterisations of a complement, and
//! the invariant transversals of subgroups of an abelian complement.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::folder::{envelope_roundtrip_check, is_invariant, is_transversal, validate_folder, LoopFolder, Transversal};
use crate::group::ops::{centralizer, derived_subgroup, generated_subgroup, is_normal, is_subgroup, right_cosets};
use crate::group::set::ElementSet;
use crate::group::sylow::gcd;
use crate::group::table::{Elem, GroupTable};

/// Largest number of folders [`lift_frobenius_transversals`] will materialise.
pub const MAX_LIFTED_FOLDERS: u128 = 100_000;

/// A Frobenius group `G = N ⋊ C` with kernel `N` and complement `C`.
#[derive(Clone, Debug)]
pub struct FrobeniusStructure {
    pub group: Arc<GroupTable>,
    pub kernel: ElementSet,
    pub complement: ElementSet,
    pub complement_abelian: bool,
}

/// `C ∩ C^g = {1}` for all `g ∉ C` (with `1 < C < G`).
pub fn is_frobenius_complement(g: &GroupTable, c: &ElementSet) -> bool {
    if c.len() <= 1 || c.len() >= g.order() || !is_subgroup(g, c) {
        return false;
    }
    g.elements().filter(|&x| !c.contains(x)).all(|x| c.intersect(&c.conjugate(g, x)).is_trivial())
}

/// `G − ⋃_g (C − {1})^g`.
pub fn frobenius_kernel(g: &GroupTable, c: &ElementSet) -> ElementSet {
    let mut covered = vec![false; g.order()];
    for x in g.elements() {
        for y in c.iter().filter(|&y| y != 0) {
            covered[g.conj(y, x)] = true;
        }
    }
    ElementSet::from_members(g.order(), g.elements().filter(|&x| !covered[x]))
}

/// Builds and validates the structure for a given complement.
pub fn frobenius_structure(g: &Arc<GroupTable>, c: &ElementSet) -> Result<FrobeniusStructure> {
    if !is_frobenius_complement(g, c) {
        return Err(Error::PreconditionFailed("not a Frobenius complement".into()));
    }
    let kernel = frobenius_kernel(g, c);
    let kernel = kernel
        .into_subgroup(g)
        .map_err(|_| Error::InternalTheoremViolation("Frobenius kernel is not a subgroup".into()))?;
    if !is_normal(g, &kernel) || kernel.len() * c.len() != g.order() || !kernel.intersect(c).is_trivial() {
        return Err(Error::InternalTheoremViolation("Frobenius kernel is not a normal complement".into()));
    }
    let complement = c.clone().into_subgroup(g)?;
    let complement_abelian = complement.iter().all(|a| complement.iter().all(|b| g.mul(a, b) == g.mul(b, a)));
    Ok(FrobeniusStructure { group: g.clone(), kernel, complement, complement_abelian })
}

/// Finds a Frobenius complement of smallest order (ties: smallest member list) and the
/// kernel. Candidate complements are the subgroups generated by at most two elements
/// whose order `m` satisfies `gcd(m, |G|/m) = 1` and `m | |G|/m − 1`.
pub fn detect_frobenius(g: &Arc<GroupTable>) -> Result<Option<FrobeniusStructure>> {
    let n = g.order();
    let orders = g.element_orders();
    for m in (2..n).filter(|&m| n % m == 0 && gcd(m, n / m) == 1 && (n / m - 1) % m == 0) {
        let pool: Vec<Elem> = g.elements().filter(|&x| x != 0 && m % orders[x] == 0).collect();
        let mut seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
        for (i, &x) in pool.iter().enumerate() {
            if orders[x] == m {
                seen.insert(generated_subgroup(g, &[x]).members().to_vec());
                continue;
            }
            for &y in &pool[i + 1..] {
                let s = generated_subgroup(g, &[x, y]);
                if s.len() == m {
                    seen.insert(s.members().to_vec());
                }
            }
        }
        // BTreeSet order is the lexicographic member order
        for members in seen {
            let c = ElementSet::from_members(n, members);
            if is_frobenius_complement(g, &c) {
                return frobenius_structure(g, &c).map(Some);
            }
        }
    }
    Ok(None)
}

/// The six equivalent conditions for `N ⊴ G`, `G = NC`, `N ∩ C = 1`, `1 < C < G`:
/// (a) `C_G(n) ≤ N`, (b) `C_C(n) = 1` for `1 ≠ n ∈ N`; (c) `C_G(c) ≤ C` for
/// `1 ≠ c ∈ C`; (d) every `x ∉ N` is conjugate into `C`; (e) each `1 ≠ c ∈ C` is
/// conjugate to all of `Nc`; (f) `C` is a Frobenius complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IsaacsReport {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
    pub e: bool,
    pub f: bool,
}

impl IsaacsReport {
    pub fn all(&self) -> [bool; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }

    pub fn all_agree(&self) -> bool {
        self.all().iter().all(|&x| x == self.a)
    }
}

fn element_centralizer(g: &GroupTable, x: Elem) -> ElementSet {
    centralizer(g, &ElementSet::from_members(g.order(), [x]))
}

fn conjugacy_class_of(g: &GroupTable, x: Elem) -> ElementSet {
    ElementSet::from_members(g.order(), g.elements().map(|y| g.conj(x, y)))
}

/// Evaluates all six conditions; fails if they disagree.
pub fn isaacs_criteria(g: &GroupTable, n: &ElementSet, c: &ElementSet) -> Result<IsaacsReport> {
    let ok = is_subgroup(g, n)
        && is_subgroup(g, c)
        && is_normal(g, n)
        && n.len() * c.len() == g.order()
        && n.intersect(c).is_trivial()
        && c.len() > 1
        && c.len() < g.order();
    if !ok {
        return Err(Error::PreconditionFailed("need N ⊴ G, G = NC, N ∩ C = 1 and 1 < C < G".into()));
    }
    let nontrivial = |s: &ElementSet| s.iter().filter(|&x| x != 0).collect::<Vec<_>>();
    let (n1, c1) = (nontrivial(n), nontrivial(c));
    let a = n1.iter().all(|&x| element_centralizer(g, x).is_subset_of(n));
    let b = n1.iter().all(|&x| element_centralizer(g, x).intersect(c).is_trivial());
    let cc = c1.iter().all(|&x| element_centralizer(g, x).is_subset_of(c));
    let d = g.elements().filter(|&x| !n.contains(x)).all(|x| conjugacy_class_of(g, x).iter().any(|y| c.contains(y)));
    let e = c1.iter().all(|&x| {
        let class = conjugacy_class_of(g, x);
        n.iter().all(|k| class.contains(g.mul(k, x)))
    });
    let f = is_frobenius_complement(g, c);
    let report = IsaacsReport { a, b, c: cc, d, e, f };
    if !report.all_agree() {
        return Err(Error::InternalTheoremViolation(format!("complement conditions disagree: {report:?}")));
    }
    Ok(report)
}

/// Whether "`C` abelian ⟺ `N = G′`" holds for the structure.
pub fn kernel_derived_check(fs: &FrobeniusStructure) -> bool {
    fs.complement_abelian == (derived_subgroup(&fs.group) == fs.kernel)
}

/// `T = N ∪ Nτ_1 ∪ … ∪ Nτ_n` with `n = |C:H| − 1`; `τ_i` is the smallest element of its
/// `N`-coset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FrobeniusTransversalShape {
    pub tau_reps: Vec<Elem>,
}

impl FrobeniusTransversalShape {
    pub fn n(&self) -> usize {
        self.tau_reps.len()
    }
}

fn require_abelian_with_h(fs: &FrobeniusStructure, h: &ElementSet) -> Result<()> {
    if !fs.complement_abelian {
        return Err(Error::PreconditionFailed("complement is not abelian".into()));
    }
    if !is_subgroup(&fs.group, h) || !h.is_subset_of(&fs.complement) {
        return Err(Error::PreconditionFailed("H is not a subgroup of the complement".into()));
    }
    Ok(())
}

/// Decomposes a `G`-invariant transversal `T ∋ 1` of `H\G` (`H ≤ C`, `C` abelian) into
/// `N` and whole `N`-cosets, failing if it does not have that shape.
pub fn transversal_shape(fs: &FrobeniusStructure, h: &ElementSet, t: &Transversal) -> Result<FrobeniusTransversalShape> {
    require_abelian_with_h(fs, h)?;
    let g = &fs.group;
    if !t.contains(0) || !is_transversal(g, h, t) || !is_invariant(g, t) {
        return Err(Error::PreconditionFailed("T is not a G-invariant transversal containing 1".into()));
    }
    let n = &fs.kernel;
    if !n.iter().all(|x| t.contains(x)) {
        return Err(Error::ShapeViolation("N is not contained in T".into()));
    }
    let mut reps = Vec::new();
    let mut seen = vec![false; g.order()];
    for &x in t.iter().filter(|&&x| !n.contains(x)) {
        if seen[x] {
            continue;
        }
        for k in n.iter() {
            let y = g.mul(k, x);
            if !t.contains(y) {
                return Err(Error::ShapeViolation(format!("coset N·{x} is not inside T")));
            }
            seen[y] = true;
        }
        reps.push(x);
    }
    let expected = fs.complement.len() / h.len() - 1;
    if reps.len() != expected {
        return Err(Error::ShapeViolation(format!("{} cosets outside N, expected {expected}", reps.len())));
    }
    let hn = h.product(g, n).into_subgroup(g)?;
    let s: Vec<Elem> = std::iter::once(0).chain(reps.iter().copied()).collect();
    if !is_transversal(g, &hn, &s) {
        return Err(Error::ShapeViolation("representatives are not a transversal of HN".into()));
    }
    Ok(FrobeniusTransversalShape { tau_reps: reps })
}

/// Every folder `(G, H, NS)` for `S ∋ 1` a transversal of `HN\G`: fixing representatives
/// `1, s_1, …, s_r` (smallest per coset), `S` runs over `{1, h_1 s_1, …, h_r s_r}`, giving
/// `|H|^{|C:H|−1}` distinct invariant transversals.
pub fn lift_frobenius_transversals(fs: &FrobeniusStructure, h: &ElementSet) -> Result<Vec<LoopFolder>> {
    require_abelian_with_h(fs, h)?;
    let g = &fs.group;
    let h = h.clone().into_subgroup(g)?;
    let hn = h.product(g, &fs.kernel).into_subgroup(g)?;
    let reps: Vec<Elem> = right_cosets(g, &hn)?.iter().skip(1).map(|c| c[0]).collect();
    let count = (h.len() as u128).checked_pow(reps.len() as u32).unwrap_or(u128::MAX);
    if count > MAX_LIFTED_FOLDERS {
        return Err(Error::OrderBoundExceeded(MAX_LIFTED_FOLDERS as usize));
    }
    let hs: Vec<Elem> = h.members().to_vec();
    let mut idx = vec![0usize; reps.len()];
    let mut out = Vec::with_capacity(count as usize);
    loop {
        let s: Vec<Elem> = std::iter::once(0).chain(reps.iter().zip(&idx).map(|(&r, &i)| g.mul(hs[i], r))).collect();
        let t = Transversal::new(fs.kernel.iter().flat_map(|k| s.iter().map(move |&x| g.mul(k, x))));
        let f = validate_folder(g.clone(), h.clone(), t)?;
        if !f.is_rcc() {
            return Err(Error::InternalTheoremViolation("NS is not G-invariant".into()));
        }
        out.push(f);
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < hs.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
    out.sort_by(|a, b| a.transversal().cmp(b.transversal()));
    Ok(out)
}

/// The lifted folders whose transversal generates `G`; each is faithful and an envelope
/// of an RCC loop (checked).
pub fn frobenius_rcc_envelopes(fs: &FrobeniusStructure, h: &ElementSet) -> Result<Vec<LoopFolder>> {
    let mut out = Vec::new();
    for f in lift_frobenius_transversals(fs, h)? {
        if !f.is_generating() {
            continue;
        }
        if !f.is_faithful() || !envelope_roundtrip_check(&f)? {
            return Err(Error::InternalTheoremViolation("generating Frobenius folder is not an envelope".into()));
        }
        out.push(f);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::affine::affine_group;
    use crate::catalog::named::{cyclic, symmetric};
    use crate::search::enumerate_invariant_transversals;

    #[test]
    fn s3_structure() {
        let g = Arc::new(symmetric(3).unwrap());
        let fs = detect_frobenius(&g).unwrap().unwrap();
        assert_eq!(fs.kernel, derived_subgroup(&g));
        assert_eq!(fs.complement.len(), 2);
        assert!(isaacs_criteria(&g, &fs.kernel, &fs.complement).unwrap().a);
        assert!(kernel_derived_check(&fs));
        assert!(frobenius_rcc_envelopes(&fs, &fs.complement).unwrap().is_empty());
    }

    #[test]
    fn abelian_is_not_frobenius() {
        let g = Arc::new(cyclic(6).unwrap());
        assert!(detect_frobenius(&g).unwrap().is_none());
        let n = generated_subgroup(&g, &[2]);
        let c = generated_subgroup(&g, &[3]);
        let r = isaacs_criteria(&g, &n, &c).unwrap();
        assert_eq!(r.all(), [false; 6]);
    }

    #[test]
    fn affine_seven_order_three() {
        let a = affine_group(7).unwrap();
        let g = Arc::new(a.table.clone());
        let fs = detect_frobenius(&g).unwrap().unwrap();
        assert_eq!(fs.kernel, a.translations());
        let h = a.linear_subgroup(3).unwrap();
        // a complement containing h
        let fs = frobenius_structure(&g, &a.linear_part()).unwrap();
        let lifted = lift_frobenius_transversals(&fs, &h).unwrap();
        assert_eq!(lifted.len(), 3);
        let enumerated = enumerate_invariant_transversals(&g, &h, 0).unwrap().transversals;
        let lifted_t: Vec<Transversal> = lifted.iter().map(|f| f.transversal().clone()).collect();
        assert_eq!(lifted_t, enumerated);
        for t in &enumerated {
            assert_eq!(transversal_shape(&fs, &h, t).unwrap().n(), 1);
        }
    }
}
