//! Computational evidence for the statement "if `H` is abelian and `(G, H, T)` is an RCC
//! folder, then `G′ ∩ H = 1`", together with the tools that prove it in special cases:
//! the transfer for abelian Hall subgroups, normal complements of Sylow subgroups, the
//! order-`p³` argument, and the structure of envelopes of order `pq`.
//!
//! The sweep checks finitely many groups; a clean report is evidence, not a proof.

mod complement;
mod pq;
mod transfer;

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

pub use complement::{burnside_complement_check, p3_checks, P3Report};
pub use pq::{embed_in_affine, pq_structure_analysis, PqAnalysis, PqReport, PqVerdict};
pub use transfer::{hall_transfer_check, transfer_map, HallTransferReport, TransferContext};

use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::folder::{derived_construction, Transversal};
use crate::group::lattice::abelian_subgroups_up_to_conjugacy;
use crate::group::ops::derived_subgroup;
use crate::group::table::{Elem, GroupTable};
use crate::search::{count_invariant_transversals_with_budget, enumerate_invariant_transversals_with, SearchOptions, DEFAULT_NODE_BUDGET};

/// Sweep settings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConjectureOptions {
    pub node_budget: u64,
    /// Also count every invariant transversal of each subgroup (slower).
    pub full_enumeration: bool,
}

impl Default for ConjectureOptions {
    fn default() -> Self {
        ConjectureOptions { node_budget: DEFAULT_NODE_BUDGET, full_enumeration: false }
    }
}

/// An abelian `H` with a `G`-invariant transversal `T ∋ 1` and `1 ≠ x ∈ G′ ∩ H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Counterexample {
    pub group: String,
    pub subgroup: Vec<Elem>,
    pub transversal: Transversal,
    pub element: Elem,
}

/// A subgroup whose search ran out of budget before settling existence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Incomplete {
    pub subgroup: Vec<Elem>,
    pub budget: u64,
}

/// The number of invariant transversals of one subgroup (full-enumeration mode).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SubgroupCount {
    pub subgroup: Vec<Elem>,
    /// Decimal, since the count may exceed 64 bits.
    pub count: String,
    pub complete: bool,
}

/// Result of checking one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConjectureReport {
    pub group: String,
    pub order: usize,
    /// Abelian subgroups tested, one per conjugacy class.
    pub subgroups_tested: usize,
    /// Subgroups admitting a `G`-invariant transversal containing 1.
    pub folders_found: usize,
    /// Of those, how many have `G′ ∩ H = 1` (where the folder `(G, H, G′S)` exists);
    /// equals `folders_found` exactly when there is no counterexample.
    pub derived_form_folders: usize,
    pub counterexamples: Vec<Counterexample>,
    pub incomplete: Vec<Incomplete>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counts: Option<Vec<SubgroupCount>>,
}

/// Checks every abelian subgroup of `G` up to conjugacy (conjugate subgroups have
/// conjugate transversals): if a `G`-invariant transversal containing 1 exists, then
/// `G′ ∩ H` must be trivial. Searches that exhaust the budget are listed, not fatal.
pub fn verify_conjecture(name: &str, g: &Arc<GroupTable>, opts: &ConjectureOptions) -> Result<ConjectureReport> {
    let d = derived_subgroup(g);
    let subgroups = abelian_subgroups_up_to_conjugacy(g)?;
    let mut report = ConjectureReport {
        group: name.to_string(),
        order: g.order(),
        subgroups_tested: subgroups.len(),
        folders_found: 0,
        derived_form_folders: 0,
        counterexamples: Vec::new(),
        incomplete: Vec::new(),
        counts: opts.full_enumeration.then(Vec::new),
    };
    let search = SearchOptions { limit: 1, node_budget: opts.node_budget, require_generating: false };
    for h in &subgroups {
        let meet = d.intersect(h);
        let out = enumerate_invariant_transversals_with(g, h, &search)?;
        match out.transversals.into_iter().next() {
            Some(t) => {
                report.folders_found += 1;
                match meet.iter().find(|&x| x != 0) {
                    Some(x) => report.counterexamples.push(Counterexample {
                        group: name.to_string(),
                        subgroup: h.members().to_vec(),
                        transversal: t,
                        element: x,
                    }),
                    None => report.derived_form_folders += 1,
                }
            }
            None if out.budget_exhausted => {
                report.incomplete.push(Incomplete { subgroup: h.members().to_vec(), budget: opts.node_budget })
            }
            None => {
                // G′ ∩ H = 1 always yields the folder (G, H, G′S)
                if meet.is_trivial() {
                    derived_construction(g, h)?;
                    return Err(Error::InternalTheoremViolation(format!(
                        "search missed a folder for {:?} in {name}",
                        h.members()
                    )));
                }
            }
        }
        if let Some(counts) = report.counts.as_mut() {
            let c = count_invariant_transversals_with_budget(g, h, opts.node_budget)?;
            counts.push(SubgroupCount { subgroup: h.members().to_vec(), count: c.count.to_string(), complete: c.complete });
        }
    }
    Ok(report)
}

/// Reports for a whole catalog, in catalog order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CatalogConjectureReport {
    pub note: String,
    /// Names of the groups checked.
    pub covered: Vec<String>,
    pub total_counterexamples: usize,
    pub reports: Vec<ConjectureReport>,
}

/// Runs [`verify_conjecture`] on every catalog entry in parallel; the result does not
/// depend on scheduling.
pub fn verify_catalog(entries: &[CatalogEntry], opts: &ConjectureOptions) -> Result<CatalogConjectureReport> {
    let reports: Vec<ConjectureReport> =
        entries.par_iter().map(|e| verify_conjecture(&e.name, &e.group, opts)).collect::<Result<_>>()?;
    Ok(CatalogConjectureReport {
        note: "finite check over the listed groups; evidence, not a proof".into(),
        covered: reports.iter().map(|r| r.group.clone()).collect(),
        total_counterexamples: reports.iter().map(|r| r.counterexamples.len()).sum(),
        reports,
    })
}
