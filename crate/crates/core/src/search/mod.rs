//! Enumeration of invariant transversals and the existence criteria for transversals
//! invariant under a subgroup.

mod cover;
pub mod felsch;

use serde::Serialize;

pub use cover::DEFAULT_NODE_BUDGET;
pub use felsch::{abelian_h_invariance_criterion, double_coset_transversal, felsch_criteria, FelschReport};

use crate::error::{Error, Result};
use crate::folder::{is_invariant_under, is_transversal, Transversal};
use crate::group::ops::{conjugacy_classes, generates, is_subgroup, orbits_under_conjugation, right_cosets};
use crate::group::set::ElementSet;
use crate::group::table::{Elem, GroupTable};
use cover::{Budget, CoverInstance};

/// Search controls.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchOptions {
    /// Maximum number of transversals returned; 0 means all.
    pub limit: usize,
    /// Maximum number of search nodes before giving up.
    pub node_budget: u64,
    /// Keep only transversals generating `G`.
    pub require_generating: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { limit: 0, node_budget: DEFAULT_NODE_BUDGET, require_generating: false }
    }
}

impl SearchOptions {
    pub fn with_limit(limit: usize) -> Self {
        SearchOptions { limit, ..Self::default() }
    }
}

/// Transversals found, with how the search ended.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchOutcome {
    /// Sorted lexicographically by element indices.
    pub transversals: Vec<Transversal>,
    pub nodes: u64,
    /// The node budget ran out; more transversals may exist.
    pub budget_exhausted: bool,
    /// The search stopped at `limit`.
    pub limit_reached: bool,
}

impl SearchOutcome {
    /// Whether `transversals` is the full list.
    pub fn is_complete(&self) -> bool {
        !self.budget_exhausted && !self.limit_reached
    }
}

/// A count of invariant transversals; `count` is a lower bound unless `complete`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CountOutcome {
    pub count: u128,
    pub nodes: u64,
    pub complete: bool,
}

fn require_subgroup(g: &GroupTable, h: &ElementSet) -> Result<()> {
    if h.parent_order() == g.order() && (h.is_subgroup() || is_subgroup(g, h)) {
        Ok(())
    } else {
        Err(Error::NotSubgroup)
    }
}

fn run(g: &GroupTable, h: &ElementSet, partition: &[ElementSet], opts: &SearchOptions) -> Result<SearchOutcome> {
    require_subgroup(g, h)?;
    let inst = CoverInstance::new(g, h, partition);
    let mut budget = Budget::new(opts.node_budget);
    let accept = |t: &[Elem]| !opts.require_generating || generates(g, t);
    let found = inst.enumerate(opts.limit, &mut budget, &accept, opts.require_generating);
    let limit_reached = opts.limit > 0 && found.len() >= opts.limit;
    Ok(SearchOutcome {
        transversals: found.into_iter().map(Transversal::new).collect(),
        nodes: budget.used,
        budget_exhausted: budget.exhausted(),
        limit_reached,
    })
}

/// All `G`-invariant transversals of `H\G` containing 1 (up to `limit`, 0 = all):
/// unions of conjugacy classes meeting each right coset of `H` exactly once.
pub fn enumerate_invariant_transversals(g: &GroupTable, h: &ElementSet, limit: usize) -> Result<SearchOutcome> {
    enumerate_invariant_transversals_with(g, h, &SearchOptions::with_limit(limit))
}

pub fn enumerate_invariant_transversals_with(g: &GroupTable, h: &ElementSet, opts: &SearchOptions) -> Result<SearchOutcome> {
    run(g, h, &conjugacy_classes(g), opts)
}

/// All `U`-invariant transversals of `H\G` containing 1, i.e. `(U, H, G)`-systems
/// through 1.
pub fn enumerate_invariant_systems(g: &GroupTable, h: &ElementSet, u: &ElementSet, opts: &SearchOptions) -> Result<SearchOutcome> {
    require_subgroup(g, u)?;
    run(g, h, &orbits_under_conjugation(g, u), opts)
}

/// The number of `G`-invariant transversals of `H\G` containing 1, without listing them.
pub fn count_invariant_transversals(g: &GroupTable, h: &ElementSet) -> Result<CountOutcome> {
    count_invariant_transversals_with_budget(g, h, DEFAULT_NODE_BUDGET)
}

pub fn count_invariant_transversals_with_budget(g: &GroupTable, h: &ElementSet, node_budget: u64) -> Result<CountOutcome> {
    require_subgroup(g, h)?;
    let inst = CoverInstance::new(g, h, &conjugacy_classes(g));
    let mut budget = Budget::new(node_budget);
    let count = inst
        .count(&mut budget)
        .ok_or_else(|| Error::PreconditionFailed("transversal count exceeds 128 bits".into()))?;
    Ok(CountOutcome { count, nodes: budget.used, complete: !budget.exhausted() })
}

/// Reference implementation: every transversal containing 1, filtered for
/// `G`-invariance. Exponential; meant for cross-checking on small groups.
pub fn brute_force_invariant_transversals(g: &GroupTable, h: &ElementSet) -> Result<Vec<Transversal>> {
    require_subgroup(g, h)?;
    let cosets = right_cosets(g, h)?;
    let whole = ElementSet::whole(g.order());
    let mut out = Vec::new();
    let mut idx = vec![0usize; cosets.len()];
    loop {
        let t: Vec<Elem> =
            std::iter::once(0).chain(cosets.iter().zip(&idx).skip(1).map(|(c, &i)| c[i])).collect();
        let set = ElementSet::from_members(g.order(), t.iter().copied());
        if is_invariant_under(g, &set, &whole) {
            debug_assert!(is_transversal(g, h, &t));
            out.push(Transversal::new(t));
        }
        let mut k = 1;
        while k < cosets.len() {
            idx[k] += 1;
            if idx[k] < cosets[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k >= cosets.len() {
            break;
        }
    }
    out.sort();
    Ok(out)
}
