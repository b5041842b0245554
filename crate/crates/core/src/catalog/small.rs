//! A complete catalog of small groups up to isomorphism, with familiar names where a
//! named family provides one.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::affine::{affine_group, MAX_AFFINE_Q};
use super::extension::{cyclic_extension, extension_data};
use super::field::FiniteField;
use super::named::{
    abelian, alternating, cyclic, cyclic_semidirect, dicyclic, dihedral, heisenberg, symmetric, wreath_cyclic_c2,
};
use crate::error::{Error, Result};
use crate::group::iso::{find_isomorphism, signatures};
use crate::group::ops::induced_subgroup;
use crate::group::product::direct_product;
use crate::group::sylow::{gcd, prime_divisors};
use crate::group::table::GroupTable;

/// Largest order accepted by [`small_group_catalog`].
pub const MAX_CATALOG_ORDER: usize = 63;

/// Which constructor produced an entry, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Provenance {
    pub constructor: String,
    pub params: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: Arc<GroupTable>,
    pub provenance: Provenance,
}

impl CatalogEntry {
    pub fn order(&self) -> usize {
        self.group.order()
    }
}

struct Candidate {
    name: String,
    order: usize,
    constructor: &'static str,
    params: Vec<usize>,
    build: Box<dyn Fn() -> Result<GroupTable> + Send + Sync>,
}

fn candidate(
    name: String,
    order: usize,
    constructor: &'static str,
    params: Vec<usize>,
    build: impl Fn() -> Result<GroupTable> + Send + Sync + 'static,
) -> Candidate {
    Candidate { name, order, constructor, params, build: Box::new(build) }
}

/// All invariant-factor sequences `m_1, …, m_r` (`m_j | m_{j−1}`, `r ≥ 2`) with product
/// at most `max`.
fn abelian_types(max: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, product: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        let last = *prefix.last().unwrap();
        for d in 2..=last {
            if last % d == 0 && product * d <= max {
                prefix.push(d);
                extend(prefix, product * d, max, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    for m in 2..=max {
        extend(&mut vec![m], m, max, &mut out);
    }
    out
}

fn type_name(orders: &[usize]) -> String {
    orders.iter().map(|m| format!("C{m}")).collect::<Vec<_>>().join("x")
}

/// Named candidates of order `n` in priority order: when two are isomorphic, the earlier
/// name is kept.
fn named_candidates(n: usize) -> Vec<Candidate> {
    let mut c = Vec::new();
    c.push(candidate(format!("C{n}"), n, "cyclic", vec![n], move || cyclic(n)));
    for t in abelian_types(n).into_iter().filter(|t| t.iter().product::<usize>() == n) {
        let t2 = t.clone();
        c.push(candidate(type_name(&t), n, "abelian", t, move || abelian(&t2)));
    }
    if n >= 6 && n % 2 == 0 {
        c.push(candidate(format!("D{n}"), n, "dihedral", vec![n], move || dihedral(n)));
    }
    if n >= 8 && n % 4 == 0 {
        let name = if n == 8 { "Q8".to_string() } else { format!("Dic{n}") };
        c.push(candidate(name, n, "dicyclic", vec![n], move || dicyclic(n)));
    }
    for k in 3..=5 {
        let factorial: usize = (1..=k).product();
        if k <= 4 && factorial == n {
            c.push(candidate(format!("S{k}"), n, "symmetric", vec![k], move || symmetric(k)));
        }
        if factorial / 2 == n {
            c.push(candidate(format!("A{k}"), n, "alternating", vec![k], move || alternating(k)));
        }
    }
    // prime powers with a shipped field modulus (this leaves out 27)
    let has_field = |q: usize| {
        let ps = prime_divisors(q);
        ps.len() == 1 && (1..7).any(|k| ps[0].pow(k) == q && FiniteField::new(ps[0], k as usize).is_ok())
    };
    for q in (3..=n.min(MAX_AFFINE_Q)).filter(|&q| has_field(q)) {
        for d in (2..q).filter(|d| (q - 1) % d == 0 && q * d == n) {
            let name = if d == q - 1 { format!("Aff(1,{q})") } else { format!("Aff(1,{q})_{d}") };
            c.push(candidate(name, n, "affine_subgroup", vec![q, d], move || {
                let a = affine_group(q)?;
                Ok(induced_subgroup(&a.table, &a.translation_extension(d)?)?.0)
            }));
        }
    }
    for p in [3, 5] {
        if 2 * p * p == n {
            c.push(candidate(format!("C{p}wrC2"), n, "wreath", vec![p], move || wreath_cyclic_c2(p)));
        }
    }
    if n == 27 {
        c.push(candidate("Heis27".into(), n, "heisenberg", vec![3], move || heisenberg(3)));
    }
    for m in (2..n).filter(|m| n % m == 0) {
        let k_mod = n / m;
        if k_mod < 3 {
            continue;
        }
        for k in 2..k_mod {
            if mod_pow(k, m, k_mod) == 1 && gcd(k, k_mod) == 1 {
                c.push(candidate(format!("C{k_mod}:C{m}[{k}]"), n, "cyclic_semidirect", vec![m, k_mod, k], move || {
                    cyclic_semidirect(m, k_mod, k)
                }));
            }
        }
    }
    c
}

fn mod_pow(base: usize, exp: usize, m: usize) -> usize {
    (0..exp).fold(1 % m, |acc, _| acc * base % m)
}

/// `A × B` for every non-abelian catalog entry `A` with `|A| · |B| = n`; larger `A`
/// first, and when both factors are non-abelian only one order of the pair.
fn product_candidates(n: usize) -> Result<Vec<Candidate>> {
    let mut c = Vec::new();
    for d in (2..n).rev().filter(|d| n % d == 0) {
        let (lefts, rights) = (entries_of_order(d)?, entries_of_order(n / d)?);
        for (i, a) in lefts.iter().enumerate().filter(|(_, a)| !a.group.is_abelian()) {
            for (j, b) in rights.iter().enumerate() {
                if !b.group.is_abelian() && (n / d, &b.name) < (d, &a.name) {
                    continue;
                }
                let (ga, gb) = (a.group.clone(), b.group.clone());
                c.push(candidate(format!("{}x{}", a.name, b.name), n, "direct_product", vec![d, i, n / d, j], move || {
                    Ok((*direct_product(&ga, &gb)?.group).clone())
                }));
            }
        }
    }
    Ok(c)
}

/// Every extension of a catalog group of order `n / p` by `C_p`, `p` prime, up to the
/// action of the automorphism group on the extension data.
fn extension_candidates(n: usize) -> Result<Vec<Candidate>> {
    let mut bases = Vec::new();
    for p in prime_divisors(n) {
        for (i, e) in entries_of_order(n / p)?.into_iter().enumerate() {
            bases.push((p, i, e));
        }
    }
    let data: Vec<_> = bases.par_iter().map(|(p, _, e)| extension_data(&e.group, *p)).collect();
    let mut c = Vec::new();
    for ((p, i, e), data) in bases.into_iter().zip(data) {
        for (k, (sigma, z)) in data.into_iter().enumerate() {
            let base = e.group.clone();
            c.push(candidate(format!("{}.C{p}#{}", e.name, k + 1), n, "cyclic_extension", vec![n / p, i, p, k], move || {
                cyclic_extension(&base, p, &sigma, z)
            }));
        }
    }
    Ok(c)
}

fn cache() -> &'static Mutex<BTreeMap<usize, Vec<CatalogEntry>>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Vec<CatalogEntry>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

/// One representative of each isomorphism type of order `n` (`n ≤ MAX_CATALOG_ORDER`),
/// sorted by name. Results are memoized.
pub fn entries_of_order(n: usize) -> Result<Vec<CatalogEntry>> {
    if n == 0 || n > MAX_CATALOG_ORDER {
        return Err(Error::OrderBoundExceeded(MAX_CATALOG_ORDER));
    }
    if let Some(hit) = cache().lock().expect("catalog cache").get(&n) {
        return Ok(hit.clone());
    }
    let mut kept = Vec::new();
    if n == 1 {
        kept.push(CatalogEntry {
            name: "C1".into(),
            group: Arc::new(GroupTable::trivial()),
            provenance: Provenance { constructor: "cyclic".into(), params: vec![1] },
        });
    } else {
        add_deduplicated(&mut kept, named_candidates(n))?;
        add_deduplicated(&mut kept, product_candidates(n)?)?;
        add_deduplicated(&mut kept, extension_candidates(n)?)?;
    }
    kept.sort_by(|a, b| a.name.cmp(&b.name));
    cache().lock().expect("catalog cache").insert(n, kept.clone());
    Ok(kept)
}

/// Every group of order at most `max_order` (capped at [`MAX_CATALOG_ORDER`]) up to
/// isomorphism, sorted by (order, name).
///
/// Familiar families name their members: cyclic and all abelian types, dihedral,
/// dicyclic, `S_3`, `S_4`, `A_4`, `A_5`, the affine groups `Aff(1,q)` and their
/// subgroups `L'P`, `C_3 ≀ C_2`, `C_5 ≀ C_2`, the Heisenberg group of order 27 and every
/// `C_m ⋉ C_n` with `x ↦ kx` (written `Cn:Cm[k]`); then direct products `AxB` with `A`
/// non-abelian. Every remaining group is reached as an extension `N.Cp#k` of a smaller
/// entry `N` by a cyclic group of prime order (every group of order below 60 is
/// solvable, so has a normal subgroup of prime index, and `A_5` is named). Of several
/// isomorphic constructions the first one listed here names the entry.
pub fn small_group_catalog(max_order: usize) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for n in 1..=max_order.min(MAX_CATALOG_ORDER) {
        out.extend(entries_of_order(n)?);
    }
    Ok(out)
}

/// Keeps each candidate not isomorphic to an earlier one. Candidates are built in
/// parallel and compared within classes of equal signature.
fn add_deduplicated(kept: &mut Vec<CatalogEntry>, cands: Vec<Candidate>) -> Result<()> {
    let built: Vec<Result<Arc<GroupTable>>> = cands.par_iter().map(|c| (c.build)().map(Arc::new)).collect();
    let mut classes: BTreeMap<(bool, Vec<(usize, usize)>), (Vec<Arc<GroupTable>>, Vec<usize>)> = BTreeMap::new();
    for e in kept.iter() {
        classes.entry(signature_key(&e.group)).or_default().0.push(e.group.clone());
    }
    let mut groups = Vec::with_capacity(built.len());
    for (i, (cand, group)) in cands.iter().zip(built).enumerate() {
        let group = group?;
        debug_assert_eq!(group.order(), cand.order);
        classes.entry(signature_key(&group)).or_default().1.push(i);
        groups.push(group);
    }
    let fresh: Vec<Vec<usize>> = classes
        .into_par_iter()
        .map(|(_, (mut reps, members))| -> Result<Vec<usize>> {
            let mut fresh = Vec::new();
            for i in members {
                let mut duplicate = false;
                for r in &reps {
                    if find_isomorphism(r, &groups[i])?.is_some() {
                        duplicate = true;
                        break;
                    }
                }
                if !duplicate {
                    reps.push(groups[i].clone());
                    fresh.push(i);
                }
            }
            Ok(fresh)
        })
        .collect::<Result<_>>()?;
    let mut fresh: Vec<usize> = fresh.into_iter().flatten().collect();
    fresh.sort_unstable();
    let mut cands: Vec<Option<Candidate>> = cands.into_iter().map(Some).collect();
    for i in fresh {
        let cand = cands[i].take().expect("each candidate kept once");
        kept.push(CatalogEntry {
            name: cand.name,
            group: groups[i].clone(),
            provenance: Provenance { constructor: cand.constructor.to_string(), params: cand.params },
        });
    }
    Ok(())
}

fn signature_key(g: &GroupTable) -> (bool, Vec<(usize, usize)>) {
    let mut s = signatures(g);
    s.sort_unstable();
    (g.is_abelian(), s)
}
