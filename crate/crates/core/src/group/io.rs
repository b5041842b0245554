//! The `.grp` text format.
//!
//! ```text
//! # comments run to end of line
//! format perm 4
//! (0 1)(2 3)
//! (1 2)
//! label 1 s
//! ```
//!
//! or `format table <n>` followed by `n` rows of whitespace-separated indices. `label`
//! lines may appear anywhere after the header and override the default labels.

use std::path::Path;

use super::perm::{cycle_notation, parse_cycles, perm_group, Perm};
use super::table::{GroupTable, DEFAULT_MAX_ORDER};
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

pub fn parse_grp(text: &str) -> Result<GroupTable> {
    parse_grp_bounded(text, DEFAULT_MAX_ORDER)
}

pub fn parse_grp_bounded(text: &str, max_order: usize) -> Result<GroupTable> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "empty group file"))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    let (kind, size) = match words.as_slice() {
        ["format", kind, n] => (*kind, n.parse::<usize>().map_err(|_| parse_err(hline, "bad size"))?),
        _ => return Err(parse_err(hline, "expected `format perm <degree>` or `format table <order>`")),
    };
    let mut labels: Vec<(usize, usize, String)> = Vec::new();
    let mut body: Vec<(usize, &str)> = Vec::new();
    for (no, l) in lines {
        if let Some(rest) = l.strip_prefix("label ") {
            let rest = rest.trim_start();
            let (idx, name) = rest.split_once(char::is_whitespace).ok_or_else(|| parse_err(no, "label needs index and text"))?;
            let idx = idx.parse::<usize>().map_err(|_| parse_err(no, "bad label index"))?;
            labels.push((no, idx, name.trim().to_string()));
        } else {
            body.push((no, l));
        }
    }
    let table = match kind {
        "perm" => {
            let gens: Vec<Perm> = body
                .iter()
                .map(|&(no, l)| parse_cycles(l, size).map_err(|e| parse_err(no, e.to_string())))
                .collect::<Result<_>>()?;
            perm_group(size, &gens, max_order)?.table
        }
        "table" => {
            if size > max_order {
                return Err(Error::OrderBoundExceeded(max_order));
            }
            if body.len() != size {
                return Err(parse_err(hline, format!("expected {size} rows, found {}", body.len())));
            }
            let rows: Vec<Vec<usize>> = body
                .iter()
                .map(|&(no, l)| {
                    l.split_whitespace()
                        .map(|w| w.parse::<usize>().map_err(|_| parse_err(no, format!("bad entry {w:?}"))))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<_>>()?;
            GroupTable::from_table(&rows, None)?
        }
        other => return Err(parse_err(hline, format!("unknown format {other:?}"))),
    };
    if labels.is_empty() {
        return Ok(table);
    }
    let mut names = table.labels().to_vec();
    for (no, idx, name) in labels {
        if idx >= names.len() {
            return Err(parse_err(no, format!("label index {idx} out of range")));
        }
        names[idx] = name;
    }
    Ok(table.with_labels(names))
}

pub fn read_grp(path: impl AsRef<Path>) -> Result<GroupTable> {
    parse_grp(&std::fs::read_to_string(path)?)
}

/// `format table` rendering; labels are written when they differ from the defaults.
pub fn format_grp_table(g: &GroupTable) -> String {
    let mut out = format!("format table {}\n", g.order());
    for a in g.elements() {
        let row: Vec<String> = g.row(a).iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    for x in g.elements() {
        out.push_str(&format!("label {x} {}\n", g.label(x)));
    }
    out
}

/// `format perm` rendering of a generating set.
pub fn format_grp_perm(degree: usize, gens: &[Perm]) -> String {
    let mut out = format!("format perm {degree}\n");
    for p in gens {
        out.push_str(&cycle_notation(p));
        out.push('\n');
    }
    out
}
