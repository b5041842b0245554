//! The subcommands. Each returns an [`Outcome`]: a JSON result, a text summary, an
//! optional CSV table and any files to write; `main` does all the writing.

use std::path::Path;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use loopforge::abelian::{generating_transversal_abelian, lift_generating_transversal_from_quotient};
use loopforge::catalog::small_group_catalog;
use loopforge::conjecture::{pq_structure_analysis, verify_catalog, ConjectureOptions};
use loopforge::folder::io::{format_folder, read_folder};
use loopforge::folder::{envelope, envelope_roundtrip_check, loop_from_folder, validate_folder, validate_folder_exhaustive, LoopFolder};
use loopforge::frobenius::{
    detect_frobenius, isaacs_criteria, kernel_derived_check, lift_frobenius_transversals, transversal_shape,
};
use loopforge::group::io::{format_grp_table, parse_grp_bounded};
use loopforge::group::ops::{center, generated_subgroup};
use loopforge::group::{ElementSet, GroupTable};
use loopforge::loops::io::{format_loop, read_loop};
use loopforge::loops::LoopTable;
use loopforge::search::{count_invariant_transversals_with_budget, enumerate_invariant_transversals_with, SearchOptions};

use crate::config::RunConfig;

/// Why a command did not succeed: bad input (exit 2) or a failed check (exit 1).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl From<loopforge::Error> for CliError {
    fn from(e: loopforge::Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// What a command produced.
#[derive(Debug)]
pub struct Outcome {
    pub command: &'static str,
    pub result: Value,
    pub text: String,
    pub csv: Option<String>,
    /// `(file name, contents)` pairs written into the output directory.
    pub artifacts: Vec<(String, String)>,
    /// A check failed or a counterexample was found: exit code 1.
    pub failed: bool,
}

impl Outcome {
    fn new(command: &'static str, result: impl Serialize, text: String) -> CliResult<Self> {
        let result = serde_json::to_value(result).map_err(|e| CliError::Failed(e.to_string()))?;
        Ok(Outcome { command, result, text, csv: None, artifacts: Vec::new(), failed: false })
    }
}

/// Name of the group file copied next to emitted `.folder` files.
pub const EMITTED_GROUP: &str = "group.grp";

pub fn load_group(path: &Path, cfg: &RunConfig) -> CliResult<Arc<GroupTable>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read group file {}: {e}", path.display())))?;
    parse_grp_bounded(&text, cfg.max_group_order)
        .map(Arc::new)
        .map_err(|e| CliError::Usage(format!("invalid group file {}: {e}", path.display())))
}

/// Element indices separated by spaces or commas, each below `n`.
pub fn parse_indices(text: &str, n: usize) -> CliResult<Vec<usize>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|w| !w.is_empty())
        .map(|w| match w.parse::<usize>() {
            Ok(x) if x < n => Ok(x),
            Ok(x) => Err(CliError::Usage(format!("element {x} out of range for a group of order {n}"))),
            Err(_) => Err(CliError::Usage(format!("expected element indices, got {w:?}"))),
        })
        .collect()
}

fn members(s: &ElementSet) -> Vec<usize> {
    s.members().to_vec()
}

fn folder_json(f: &LoopFolder) -> Value {
    json!({
        "groupOrder": f.group().order(),
        "subgroup": members(f.subgroup()),
        "transversal": f.transversal().as_slice(),
        "order": f.order(),
        "rcc": f.is_rcc(),
        "faithful": f.is_faithful(),
        "generating": f.is_generating(),
    })
}

// ---------------------------------------------------------------- catalog

#[derive(Serialize)]
struct CatalogRow {
    name: String,
    order: usize,
    abelian: bool,
    constructor: String,
    params: Vec<usize>,
}

pub fn catalog(max_order: usize) -> CliResult<Outcome> {
    let entries = small_group_catalog(max_order)?;
    let rows: Vec<CatalogRow> = entries
        .iter()
        .map(|e| CatalogRow {
            name: e.name.clone(),
            order: e.order(),
            abelian: e.group.is_abelian(),
            constructor: e.provenance.constructor.clone(),
            params: e.provenance.params.clone(),
        })
        .collect();
    let mut text = format!("{} groups of order at most {max_order}\n", rows.len());
    let mut csv = String::from("name,order,abelian,constructor\n");
    for r in &rows {
        text.push_str(&format!("{:>4}  {}{}\n", r.order, r.name, if r.abelian { "" } else { "  (non-abelian)" }));
        csv.push_str(&format!("{},{},{},{}\n", r.name, r.order, r.abelian, r.constructor));
    }
    let mut out = Outcome::new("catalog", json!({ "maxOrder": max_order, "groups": rows }), text)?;
    out.csv = Some(csv);
    Ok(out)
}

// ---------------------------------------------------------------- enumerate

pub struct EnumerateArgs<'a> {
    pub group: &'a Path,
    pub subgroup: Option<&'a str>,
    pub subgroup_center: bool,
    pub limit: usize,
    pub require_generating: bool,
    pub count: bool,
}

pub fn enumerate(args: &EnumerateArgs, cfg: &RunConfig) -> CliResult<Outcome> {
    let g = load_group(args.group, cfg)?;
    let h = match (args.subgroup, args.subgroup_center) {
        (Some(_), true) => return Err(CliError::Usage("give either --subgroup or --subgroup-center, not both".into())),
        (Some(s), false) => generated_subgroup(&g, &parse_indices(s, g.order())?),
        (None, true) => center(&g),
        (None, false) => return Err(CliError::Usage("missing --subgroup or --subgroup-center".into())),
    };
    let opts = SearchOptions { limit: args.limit, node_budget: cfg.search_node_budget, require_generating: args.require_generating };
    let out = enumerate_invariant_transversals_with(&g, &h, &opts)?;
    let count = if args.count {
        let c = count_invariant_transversals_with_budget(&g, &h, cfg.search_node_budget)?;
        Some(json!({ "value": c.count.to_string(), "complete": c.complete }))
    } else {
        None
    };
    let mut folders = Vec::new();
    for t in &out.transversals {
        folders.push(validate_folder(g.clone(), h.clone(), t.clone())?);
    }
    let mut text = format!(
        "|G| = {}, |H| = {}: {} invariant transversal(s){}\n",
        g.order(),
        h.len(),
        out.transversals.len(),
        if out.is_complete() { "" } else { " (search stopped early)" }
    );
    let mut csv = String::from("index,transversal,generating,faithful\n");
    let mut artifacts = vec![(EMITTED_GROUP.to_string(), format_grp_table(&g))];
    for (i, f) in folders.iter().enumerate() {
        let labels: Vec<&str> = f.transversal().iter().map(|&x| g.label(x)).collect();
        text.push_str(&format!("  {i}: {{{}}}{}\n", labels.join(", "), if f.is_generating() { "  generating" } else { "" }));
        let ids: Vec<String> = f.transversal().iter().map(|x| x.to_string()).collect();
        csv.push_str(&format!("{i},{},{},{}\n", ids.join(" "), f.is_generating(), f.is_faithful()));
        artifacts.push((format!("transversal_{i}.folder"), format_folder(EMITTED_GROUP, f)));
    }
    let result = json!({
        "groupFile": args.group.display().to_string(),
        "order": g.order(),
        "subgroup": members(&h),
        "transversals": out.transversals,
        "labels": folders.iter().map(|f| f.transversal().iter().map(|&x| g.label(x).to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "generating": folders.iter().map(|f| f.is_generating()).collect::<Vec<_>>(),
        "nodes": out.nodes,
        "complete": out.is_complete(),
        "limitReached": out.limit_reached,
        "budgetExhausted": out.budget_exhausted,
        "count": count,
    });
    let mut o = Outcome::new("enumerate", result, text)?;
    o.csv = Some(csv);
    o.artifacts = artifacts;
    Ok(o)
}

// ---------------------------------------------------------------- folder

pub fn folder(path: &Path, exhaustive: bool, cfg: &RunConfig) -> CliResult<Outcome> {
    let f = read_folder(path).map_err(|e| match e {
        loopforge::Error::Io(_) | loopforge::Error::Parse { .. } => {
            CliError::Usage(format!("cannot read folder file {}: {e}", path.display()))
        }
        other => CliError::Failed(other.to_string()),
    })?;
    if f.group().order() > cfg.max_group_order {
        return Err(CliError::Usage(format!("group order {} exceeds --max-order", f.group().order())));
    }
    let f = if exhaustive {
        validate_folder_exhaustive(f.group().clone(), f.subgroup().clone(), f.transversal().clone())?
    } else {
        f
    };
    let l = loop_from_folder(&f);
    let roundtrip = if f.is_rcc() && f.is_faithful() && f.is_generating() { Some(envelope_roundtrip_check(&f)?) } else { None };
    let mut result = folder_json(&f);
    result["loopAssociative"] = json!(l.is_associative());
    result["loopRcc"] = json!(l.is_rcc());
    result["envelopeRoundtrip"] = json!(roundtrip);
    let text = format!(
        "folder of order {} in a group of order {}: rcc={} faithful={} generating={} associative loop={}{}\n",
        f.order(),
        f.group().order(),
        f.is_rcc(),
        f.is_faithful(),
        f.is_generating(),
        l.is_associative(),
        roundtrip.map(|r| format!(" envelope round-trip={r}")).unwrap_or_default()
    );
    let mut o = Outcome::new("folder", result, text)?;
    o.failed = roundtrip == Some(false) || f.is_rcc() != l.is_rcc();
    o.artifacts.push(("folder.loop".into(), format_loop(&l)));
    Ok(o)
}

// ---------------------------------------------------------------- loop

pub fn loop_cmd(path: &Path, cfg: &RunConfig) -> CliResult<Outcome> {
    let l: LoopTable = read_loop(path).map_err(|e| CliError::Usage(format!("cannot read loop file {}: {e}", path.display())))?;
    let rm = l.right_multiplication_group()?;
    let rcc = l.is_rcc();
    let mut result = json!({
        "order": l.order(),
        "associative": l.is_associative(),
        "rcc": rcc,
        "rightMultiplicationGroupOrder": rm.group.order(),
        "stabilizerOrder": rm.stabilizer.len(),
    });
    let mut text = format!(
        "loop of order {}: associative={} rcc={} |RM|={}\n",
        l.order(),
        l.is_associative(),
        rcc,
        rm.group.order()
    );
    let mut artifacts = Vec::new();
    if rcc && rm.group.order() <= cfg.max_group_order {
        let f = envelope(&l)?;
        let roundtrip = envelope_roundtrip_check(&f)?;
        result["envelope"] = folder_json(&f);
        result["envelopeRoundtrip"] = json!(roundtrip);
        text.push_str(&format!("envelope: |G|={} |H|={} round-trip={roundtrip}\n", f.group().order(), f.subgroup().len()));
        artifacts.push((EMITTED_GROUP.to_string(), format_grp_table(f.group())));
        artifacts.push(("envelope.folder".to_string(), format_folder(EMITTED_GROUP, &f)));
    }
    let mut o = Outcome::new("loop", result, text)?;
    o.failed = o.result["envelopeRoundtrip"] == json!(false);
    o.artifacts = artifacts;
    Ok(o)
}

// ---------------------------------------------------------------- frobenius

pub fn frobenius(group: &Path, subgroup: Option<&str>, cfg: &RunConfig) -> CliResult<Outcome> {
    let g = load_group(group, cfg)?;
    let Some(fs) = detect_frobenius(&g)? else {
        return Outcome::new("frobenius", json!({ "order": g.order(), "frobenius": false }), format!("group of order {} is not a Frobenius group\n", g.order()));
    };
    let isaacs = isaacs_criteria(&g, &fs.kernel, &fs.complement)?;
    let derived_ok = kernel_derived_check(&fs);
    let mut result = json!({
        "order": g.order(),
        "frobenius": true,
        "kernel": members(&fs.kernel),
        "complement": members(&fs.complement),
        "complementAbelian": fs.complement_abelian,
        "isaacs": isaacs,
        "kernelIsDerivedIffComplementAbelian": derived_ok,
    });
    let mut text = format!(
        "Frobenius group of order {}: kernel {}, complement {}{}\n",
        g.order(),
        fs.kernel.len(),
        fs.complement.len(),
        if fs.complement_abelian { " (abelian)" } else { "" }
    );
    let mut failed = !derived_ok || !isaacs.all().iter().all(|&x| x);
    if let Some(s) = subgroup {
        let h = generated_subgroup(&g, &parse_indices(s, g.order())?);
        let count = count_invariant_transversals_with_budget(&g, &h, cfg.search_node_budget)?;
        let lifted = lift_frobenius_transversals(&fs, &h)?;
        let mut shapes = Vec::new();
        for f in &lifted {
            shapes.push(transversal_shape(&fs, &h, f.transversal())?.tau_reps);
        }
        let index = fs.complement.len() / h.len();
        let predicted = (h.len() as u128).pow(index as u32 - 1);
        failed |= count.complete && count.count != predicted;
        text.push_str(&format!(
            "|H| = {}: {} invariant transversals (predicted {predicted}), {} lifted\n",
            h.len(),
            count.count,
            lifted.len()
        ));
        result["subgroup"] = json!({
            "members": members(&h),
            "count": count.count.to_string(),
            "countComplete": count.complete,
            "predicted": predicted.to_string(),
            "lifted": lifted.len(),
            "shapes": shapes,
        });
    }
    let mut o = Outcome::new("frobenius", result, text)?;
    o.failed = failed;
    Ok(o)
}

// ---------------------------------------------------------------- abelian-transversal

pub fn abelian_transversal(group: &Path, subgroup: &str, quotient_lift: Option<&str>, cfg: &RunConfig) -> CliResult<Outcome> {
    let g = load_group(group, cfg)?;
    let h = generated_subgroup(&g, &parse_indices(subgroup, g.order())?);
    let f = match quotient_lift {
        Some(q) => {
            let q = generated_subgroup(&g, &parse_indices(q, g.order())?);
            lift_generating_transversal_from_quotient(&g, &h, &q)?
        }
        None => {
            let t = generating_transversal_abelian(&g, &h)?;
            validate_folder(g.clone(), h.clone(), t)?
        }
    };
    let text = format!(
        "generating transversal of order {} for |H| = {}: {:?}\n",
        f.order(),
        h.len(),
        f.transversal().as_slice()
    );
    let mut o = Outcome::new("abelian-transversal", folder_json(&f), text)?;
    o.failed = !f.is_generating();
    o.artifacts = vec![
        (EMITTED_GROUP.to_string(), format_grp_table(&g)),
        ("transversal.folder".to_string(), format_folder(EMITTED_GROUP, &f)),
    ];
    Ok(o)
}

// ---------------------------------------------------------------- verify-conjecture

pub fn verify_conjecture(catalog_max: usize, full_enumeration: bool, cfg: &RunConfig) -> CliResult<Outcome> {
    if catalog_max > cfg.max_group_order {
        return Err(CliError::Usage("--catalog-max exceeds --max-order".into()));
    }
    let entries: Vec<_> = small_group_catalog(catalog_max.saturating_sub(1))?
        .into_iter()
        .filter(|e| !e.group.is_abelian())
        .collect();
    let opts = ConjectureOptions { node_budget: cfg.search_node_budget, full_enumeration };
    let report = verify_catalog(&entries, &opts)?;
    let incomplete: usize = report.reports.iter().map(|r| r.incomplete.len()).sum();
    let mut text = format!(
        "{} non-abelian groups of order < {catalog_max}: {} counterexample(s), {incomplete} undecided subgroup(s)\n{}\n",
        report.covered.len(),
        report.total_counterexamples,
        report.note
    );
    let mut csv = String::from("group,order,subgroupsTested,foldersFound,counterexamples,incomplete\n");
    for r in &report.reports {
        text.push_str(&format!(
            "  {:<16} order {:>2}: {:>3} subgroups, {:>3} folders\n",
            r.group, r.order, r.subgroups_tested, r.folders_found
        ));
        csv.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.group,
            r.order,
            r.subgroups_tested,
            r.folders_found,
            r.counterexamples.len(),
            r.incomplete.len()
        ));
    }
    let failed = report.total_counterexamples > 0;
    let mut o = Outcome::new("verify-conjecture", report, text)?;
    o.csv = Some(csv);
    o.failed = failed;
    Ok(o)
}

// ---------------------------------------------------------------- analyze-pq

pub fn analyze_pq(path: &Path, p: usize, q: usize) -> CliResult<Outcome> {
    let f = read_folder(path).map_err(|e| CliError::Usage(format!("cannot read folder file {}: {e}", path.display())))?;
    let report = pq_structure_analysis(&f, p, q)?;
    let mut text = format!("envelope of order {} for a loop of order {}\n", report.group_order, report.loop_order);
    for a in &report.analyses {
        text.push_str(&format!(
            "  |K| = {} (|K:H| = {}, |G:K| = {}): |K1| = {}, |H1| = {}, |C| = {}, K normal = {}: {:?}\n",
            a.k.len(),
            a.p,
            a.q,
            a.k1.len(),
            a.h1.len(),
            a.c.len(),
            a.k_normal,
            a.verdict
        ));
    }
    Outcome::new("analyze-pq", report, text)
}
