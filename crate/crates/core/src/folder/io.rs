//! The `.folder` text format:
//!
//! ```text
//! group d8.grp
//! subgroup 0 3
//! transversal 0 1 5 6
//! ```
//!
//! The group path is resolved relative to the folder file's directory.

use std::path::Path;
use std::sync::Arc;

use super::{validate_folder, LoopFolder, Transversal};
use crate::error::{Error, Result};
use crate::group::io::{content_lines, read_grp};
use crate::group::set::ElementSet;

/// The raw contents of a `.folder` file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FolderSpec {
    pub group_path: String,
    pub subgroup: Vec<usize>,
    pub transversal: Vec<usize>,
}

pub fn parse_folder_spec(text: &str) -> Result<FolderSpec> {
    let (mut group_path, mut subgroup, mut transversal) = (None, None, None);
    let indices = |no: usize, rest: &str| -> Result<Vec<usize>> {
        rest.split_whitespace()
            .map(|w| w.parse().map_err(|_| Error::Parse { line: no, msg: format!("bad index {w:?}") }))
            .collect()
    };
    for (no, line) in content_lines(text) {
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match key {
            "group" => group_path = Some(rest.trim().to_string()),
            "subgroup" => subgroup = Some(indices(no, rest)?),
            "transversal" => transversal = Some(indices(no, rest)?),
            _ => return Err(Error::Parse { line: no, msg: format!("unknown directive {key:?}") }),
        }
    }
    let missing = |what: &str| Error::Parse { line: 0, msg: format!("missing `{what}` line") };
    Ok(FolderSpec {
        group_path: group_path.filter(|p| !p.is_empty()).ok_or_else(|| missing("group"))?,
        subgroup: subgroup.ok_or_else(|| missing("subgroup"))?,
        transversal: transversal.ok_or_else(|| missing("transversal"))?,
    })
}

/// Reads and validates a folder file together with the group file it references.
pub fn read_folder(path: impl AsRef<Path>) -> Result<LoopFolder> {
    let path = path.as_ref();
    let spec = parse_folder_spec(&std::fs::read_to_string(path)?)?;
    let grp = path.parent().unwrap_or(Path::new(".")).join(&spec.group_path);
    let g = Arc::new(read_grp(grp)?);
    let n = g.order();
    if let Some(&x) = spec.subgroup.iter().chain(&spec.transversal).find(|&&x| x >= n) {
        return Err(Error::Parse { line: 0, msg: format!("index {x} out of range for a group of order {n}") });
    }
    let h = ElementSet::from_members(n, spec.subgroup.iter().copied());
    validate_folder(g, h, Transversal::new(spec.transversal))
}

pub fn format_folder(group_path: &str, f: &LoopFolder) -> String {
    let join = |v: &mut dyn Iterator<Item = usize>| v.map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    format!(
        "group {group_path}\nsubgroup {}\ntransversal {}\n",
        join(&mut f.subgroup().iter()),
        join(&mut f.transversal().iter().copied())
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_spec() {
        let s = parse_folder_spec("# D8\ngroup d8.grp\nsubgroup 0 3\ntransversal 0 1 5 6\n").unwrap();
        assert_eq!(s.group_path, "d8.grp");
        assert_eq!(s.subgroup, vec![0, 3]);
        assert_eq!(s.transversal, vec![0, 1, 5, 6]);
        assert!(parse_folder_spec("group x\nsubgroup 0\n").is_err());
        assert!(parse_folder_spec("group x\nsubgroup 0\ntransversal a\n").is_err());
    }
}
