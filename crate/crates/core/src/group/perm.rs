//! Permutation groups and closure of arbitrary generating sets into Cayley tables.

use std::collections::HashMap;
use std::hash::Hash;

use super::table::{Elem, GroupTable, DEFAULT_MAX_ORDER};
use crate::error::{Error, Result};

/// A permutation of `0..degree` stored as its image list. Composition acts on the
/// right: `x^(ab) = (x^a)^b`.
pub type Perm = Vec<usize>;

pub fn identity_perm(degree: usize) -> Perm {
    (0..degree).collect()
}

/// `a` then `b`.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    a.iter().map(|&x| b[x]).collect()
}

pub fn invert(a: &[usize]) -> Perm {
    let mut r = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        r[x] = i;
    }
    r
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

/// Disjoint-cycle notation, fixed points omitted; the identity prints as `()`.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&x.to_string());
            first = false;
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parses `(0 1 2)(3 4)` into a permutation of the given degree. Commas are accepted
/// as separators inside cycles.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
    let bad = |msg: &str| Error::NotAPermutation(format!("{text:?}: {msg}"), degree);
    let mut p = identity_perm(degree);
    let mut seen = vec![false; degree];
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let points: Vec<usize> = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| bad("non-numeric point")))
            .collect::<Result<_>>()?;
        for (i, &a) in points.iter().enumerate() {
            if a >= degree || std::mem::replace(&mut seen[a], true) {
                return Err(bad("point repeated or out of range"));
            }
            p[a] = points[(i + 1) % points.len()];
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(p)
}

/// Enumerates the closure of `gens` under `mul` breadth-first from `identity`, then
/// fills in the full table. The element order is: identity, then discovery order.
pub(crate) fn close_under<T, F>(identity: T, gens: &[T], mul: F, max_order: usize) -> Result<(Vec<T>, Vec<Elem>)>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<T, Elem> = HashMap::new();
    index.insert(identity, 0);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in gens {
            let y = mul(&x, g);
            if !index.contains_key(&y) {
                if elements.len() >= max_order {
                    return Err(Error::OrderBoundExceeded(max_order));
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
    }
    let n = elements.len();
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = index[&mul(&elements[a], &elements[b])];
        }
    }
    Ok((elements, table))
}

/// A permutation group together with the permutation realising each table element.
#[derive(Clone, Debug)]
pub struct PermGroup {
    pub table: GroupTable,
    pub perms: Vec<Perm>,
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.perms[0].len()
    }

    /// Table index of a permutation, if it lies in the group.
    pub fn index_of(&self, p: &[usize]) -> Option<Elem> {
        self.perms.iter().position(|q| q.as_slice() == p)
    }
}

pub fn build_from_generators(degree: usize, gens: &[Perm]) -> Result<GroupTable> {
    Ok(perm_group(degree, gens, DEFAULT_MAX_ORDER)?.table)
}

/// Closes the generators into a permutation group, labelling elements by cycle notation.
pub fn perm_group(degree: usize, gens: &[Perm], max_order: usize) -> Result<PermGroup> {
    for g in gens {
        if g.len() != degree || !is_permutation(g) {
            return Err(Error::NotAPermutation(format!("{g:?}"), degree));
        }
    }
    let (perms, mul) = close_under(identity_perm(degree), gens, |a, b| compose(a, b), max_order)?;
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    let table = GroupTable::from_trusted(perms.len(), mul, labels);
    Ok(PermGroup { table, perms })
}
