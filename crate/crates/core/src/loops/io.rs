//! The `.loop` text format: `loop <order>` followed by `order` rows of indices.

use std::path::Path;

use super::table::LoopTable;
use crate::error::{Error, Result};
use crate::group::io::content_lines;

pub fn parse_loop(text: &str) -> Result<LoopTable> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "empty loop file".into() })?;
    let n = header
        .strip_prefix("loop")
        .and_then(|r| r.trim().parse::<usize>().ok())
        .ok_or(Error::Parse { line: hline, msg: "expected `loop <order>`".into() })?;
    let rows: Vec<Vec<usize>> = lines
        .map(|(no, l)| {
            l.split_whitespace()
                .map(|w| w.parse::<usize>().map_err(|_| Error::Parse { line: no, msg: format!("bad entry {w:?}") }))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    if rows.len() != n {
        return Err(Error::Parse { line: hline, msg: format!("expected {n} rows, found {}", rows.len()) });
    }
    LoopTable::from_rows(&rows, None)
}

pub fn read_loop(path: impl AsRef<Path>) -> Result<LoopTable> {
    parse_loop(&std::fs::read_to_string(path)?)
}

pub fn format_loop(l: &LoopTable) -> String {
    let mut out = format!("loop {}\n", l.order());
    for row in l.rows() {
        out.push_str(&row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
        out.push('\n');
    }
    out
}
