//! The transfer `τ: G → H` into an abelian subgroup, and the Hall-subgroup argument
//! built on it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::folder::{is_transversal, Transversal};
use crate::group::ops::{derived_subgroup, is_subgroup, right_coset_ids};
use crate::group::set::ElementSet;
use crate::group::sylow::gcd;
use crate::group::table::{Elem, GroupTable};
use crate::search::{enumerate_invariant_systems, SearchOptions};

/// Coset factors of a transversal `T` of `H\G`: for `t ∈ T` and `x ∈ G`,
/// `t·x = λ_x(t)·t'` with `λ_x(t) ∈ H` and `t' ∈ T`.
#[derive(Clone, Debug)]
pub struct TransferContext<'a> {
    group: &'a GroupTable,
    subgroup: ElementSet,
    transversal: Transversal,
    /// `lambda[i][x] = λ_x(T[i])`.
    lambda: Vec<Vec<Elem>>,
}

/// Builds the coset-factor table. `H` must be abelian so that the product defining `τ`
/// does not depend on the order of the factors.
pub fn transfer_map<'a>(g: &'a GroupTable, h: &ElementSet, t: &Transversal) -> Result<TransferContext<'a>> {
    if h.parent_order() != g.order() || !(h.is_subgroup() || is_subgroup(g, h)) {
        return Err(Error::NotSubgroup);
    }
    if h.iter().any(|a| h.iter().any(|b| g.mul(a, b) != g.mul(b, a))) {
        return Err(Error::NotAbelian);
    }
    if !is_transversal(g, h, t) {
        return Err(Error::NotTransversal(0));
    }
    let ids = right_coset_ids(g, h);
    let mut rep = vec![0; t.len()];
    for &s in t.iter() {
        rep[ids[s]] = s;
    }
    let lambda = t
        .iter()
        .map(|&s| {
            g.elements()
                .map(|x| {
                    let sx = g.mul(s, x);
                    g.mul(sx, g.inv(rep[ids[sx]]))
                })
                .collect()
        })
        .collect();
    Ok(TransferContext { group: g, subgroup: h.clone(), transversal: t.clone(), lambda })
}

impl TransferContext<'_> {
    pub fn transversal(&self) -> &Transversal {
        &self.transversal
    }

    /// `λ_x(t)` for `t` the `i`-th transversal element.
    pub fn lambda(&self, i: usize, x: Elem) -> Elem {
        self.lambda[i][x]
    }

    /// `τ(x) = Π_{t∈T} λ_x(t)`.
    pub fn evaluate(&self, x: Elem) -> Elem {
        self.lambda.iter().fold(0, |acc, row| self.group.mul(acc, row[x]))
    }

    /// `τ` on every element of `G`.
    pub fn values(&self) -> Vec<Elem> {
        self.group.elements().map(|x| self.evaluate(x)).collect()
    }

    /// Checks `τ(xy) = τ(x)τ(y)` on all pairs.
    pub fn is_homomorphism(&self) -> bool {
        let v = self.values();
        let g = self.group;
        g.elements().all(|x| g.elements().all(|y| v[g.mul(x, y)] == g.mul(v[x], v[y])))
    }

    /// Whether every factor `λ_x(t)` lies in `H` (holds by construction).
    pub fn factors_in_subgroup(&self) -> bool {
        self.lambda.iter().all(|row| row.iter().all(|&y| self.subgroup.contains(y)))
    }
}

/// The steps of the Hall-subgroup argument, each checked on the actual groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HallTransferReport {
    pub index: usize,
    /// The `H`-invariant transversal used.
    pub transversal: Transversal,
    /// `τ(h) = h^{|G:H|}` on `H`.
    pub power_map_matches: bool,
    /// `τ` restricted to `H` is a bijection of `H`.
    pub bijective_on_h: bool,
    /// `τ` is a homomorphism (checked on all pairs).
    pub homomorphism: bool,
    /// `G′ ⊆ ker τ`.
    pub derived_in_kernel: bool,
    /// The conclusion `G′ ∩ H = 1`.
    pub derived_meets_h_trivially: bool,
}

impl HallTransferReport {
    pub fn holds(&self) -> bool {
        self.power_map_matches
            && self.bijective_on_h
            && self.homomorphism
            && self.derived_in_kernel
            && self.derived_meets_h_trivially
    }
}

/// For an abelian Hall subgroup `H` with an `H`-invariant transversal `T`: checks that
/// `τ(h) = h^{|G:H|}` on `H`, that this is bijective, and that `G′ ∩ H = 1`. A failed
/// step is reported as [`Error::InternalTheoremViolation`].
pub fn hall_transfer_check(g: &GroupTable, h: &ElementSet) -> Result<HallTransferReport> {
    if h.parent_order() != g.order() || !(h.is_subgroup() || is_subgroup(g, h)) {
        return Err(Error::NotSubgroup);
    }
    let index = g.order() / h.len();
    if gcd(h.len(), index) != 1 {
        return Err(Error::NotHall);
    }
    let opts = SearchOptions::with_limit(1);
    let search = enumerate_invariant_systems(g, h, h, &opts)?;
    let t = search.transversals.into_iter().next().ok_or(Error::NoInvariantSystem)?;
    let ctx = transfer_map(g, h, &t)?;
    let v = ctx.values();
    let power_map_matches = h.iter().all(|x| v[x] == g.pow(x, index));
    let image = ElementSet::from_members(g.order(), h.iter().map(|x| v[x]));
    let bijective_on_h = image == *h;
    let homomorphism = ctx.is_homomorphism();
    let d = derived_subgroup(g);
    let derived_in_kernel = d.iter().all(|x| v[x] == 0);
    let derived_meets_h_trivially = d.intersect(h).is_trivial();
    let report = HallTransferReport {
        index,
        transversal: t,
        power_map_matches,
        bijective_on_h,
        homomorphism,
        derived_in_kernel,
        derived_meets_h_trivially,
    };
    if !report.holds() {
        return Err(Error::InternalTheoremViolation(format!("Hall transfer argument fails: {report:?}")));
    }
    Ok(report)
}
