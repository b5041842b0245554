//! Loops as Latin squares with identity.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::perm::{perm_group, Perm};
use crate::group::set::ElementSet;
use crate::group::table::{check_latin, Elem, GroupTable};

/// Right multiplication groups larger than this are rejected.
pub const RM_MAX_ORDER: usize = 512;

/// A finite loop: a Latin square whose element 0 is a two-sided identity. Not
/// necessarily associative.
#[derive(Clone, PartialEq, Eq)]
pub struct LoopTable {
    order: usize,
    mul: Vec<Elem>,
    labels: Vec<String>,
}

impl std::fmt::Debug for LoopTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LoopTable").field("order", &self.order).field("rows", &self.rows()).finish()
    }
}

impl LoopTable {
    /// Validates the Latin-square property and relocates the identity to index 0.
    pub fn from_rows(rows: &[Vec<Elem>], labels: Option<Vec<String>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NoIdentity);
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::EntryOutOfRange { row: r, col: row.len().min(n) });
            }
            if let Some(c) = row.iter().position(|&v| v >= n) {
                return Err(Error::EntryOutOfRange { row: r, col: c });
            }
        }
        check_latin(n, |r, c| rows[r][c])?;
        let e = (0..n).find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x)).ok_or(Error::NoIdentity)?;
        let perm: Vec<usize> = (0..n).map(|x| if x == 0 { e } else if x == e { 0 } else { x }).collect();
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = perm[rows[perm[a]][perm[b]]];
            }
        }
        let labels = match labels {
            Some(l) if l.len() == n => (0..n).map(|x| l[perm[x]].clone()).collect(),
            _ => (0..n).map(|x| perm[x].to_string()).collect(),
        };
        Ok(LoopTable { order: n, mul, labels })
    }

    /// A group viewed as a loop.
    pub fn from_group(g: &GroupTable) -> Self {
        let n = g.order();
        let mul = (0..n * n).map(|i| g.mul(i / n, i % n)).collect();
        LoopTable { order: n, mul, labels: g.labels().to_vec() }
    }

    pub(crate) fn from_trusted(order: usize, mul: Vec<Elem>, labels: Vec<String>) -> Self {
        LoopTable { order, mul, labels }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b]
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.mul.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Re-checks the Latin-square and identity invariants.
    pub fn check_invariants(&self) -> Result<()> {
        check_latin(self.order, |r, c| self.mul(r, c))?;
        if (0..self.order).any(|x| self.mul(0, x) != x || self.mul(x, 0) != x) {
            return Err(Error::NoIdentity);
        }
        Ok(())
    }

    /// `R_x: l ↦ l ∗ x`.
    pub fn right_translation(&self, x: Elem) -> Perm {
        (0..self.order).map(|l| self.mul(l, x)).collect()
    }

    /// First triple violating associativity, if any.
    pub fn associativity_violation(&self) -> Option<(Elem, Elem, Elem)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_violation().is_none()
    }

    /// `RM(L) = ⟨R_x : x ∈ L⟩` acting on the loop's elements.
    pub fn right_multiplication_group(&self) -> Result<RightMultiplicationGroup> {
        let translations: Vec<Perm> = (0..self.order).map(|x| self.right_translation(x)).collect();
        let gens: Vec<Perm> = translations[1..].to_vec();
        let pg = perm_group(self.order, &gens, RM_MAX_ORDER)?;
        let translation_index: Vec<Elem> =
            translations.iter().map(|p| pg.index_of(p).expect("generator lies in its closure")).collect();
        let n = pg.table.order();
        let translation_set = ElementSet::from_members(n, translation_index.iter().copied());
        let stabilizer = ElementSet::from_members(n, (0..n).filter(|&g| pg.perms[g][0] == 0))
            .into_subgroup(&pg.table)
            .expect("point stabilisers are subgroups");
        Ok(RightMultiplicationGroup {
            group: Arc::new(pg.table),
            perms: pg.perms,
            translation_index,
            translation_set,
            stabilizer,
        })
    }

    /// Whether `R_x^{-1} R_y R_x ∈ R_L` for all `x, y`; otherwise a violating `(x, y)`.
    pub fn rcc_violation(&self) -> Option<(Elem, Elem)> {
        let n = self.order;
        let translations: Vec<Perm> = (0..n).map(|x| self.right_translation(x)).collect();
        let set: std::collections::HashSet<&Perm> = translations.iter().collect();
        for x in 0..n {
            let rx = &translations[x];
            let mut rx_inv = vec![0; n];
            for (i, &v) in rx.iter().enumerate() {
                rx_inv[v] = i;
            }
            for y in 0..n {
                // x^(R_x⁻¹ R_y R_x): apply R_x⁻¹, then R_y, then R_x
                let conj: Perm = (0..n).map(|l| rx[translations[y][rx_inv[l]]]).collect();
                if !set.contains(&conj) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_rcc(&self) -> bool {
        self.rcc_violation().is_none()
    }
}

/// `RM(L)` with the right translations marked inside it.
#[derive(Clone, Debug)]
pub struct RightMultiplicationGroup {
    pub group: Arc<GroupTable>,
    /// The permutation of the loop's elements realising each group element.
    pub perms: Vec<Perm>,
    /// `translation_index[x]` is the group element `R_x`.
    pub translation_index: Vec<Elem>,
    /// `{R_x : x ∈ L}`.
    pub translation_set: ElementSet,
    /// `Stab(1_L) = {g : 0^g = 0}`.
    pub stabilizer: ElementSet,
}

impl RightMultiplicationGroup {
    /// Whether the action on the loop is transitive (it is always faithful, being a
    /// permutation group).
    pub fn is_transitive(&self) -> bool {
        let n = self.perms[0].len();
        let mut reached = vec![false; n];
        for p in &self.perms {
            reached[p[0]] = true;
        }
        reached.into_iter().all(|b| b)
    }
}

/// Whether two loops are isomorphic: backtracking over bijections fixing the identity,
/// extended along products of a generating set.
pub fn loop_isomorphic(l1: &LoopTable, l2: &LoopTable) -> Result<bool> {
    if l1.order() != l2.order() {
        return Ok(false);
    }
    if l1.order() > RM_MAX_ORDER {
        return Err(Error::OrderBoundExceeded(RM_MAX_ORDER));
    }
    let (s1, s2) = (signature(l1), signature(l2));
    let mut a = s1.clone();
    let mut b = s2.clone();
    a.sort();
    b.sort();
    if a != b {
        return Ok(false);
    }
    let gens = loop_generators(l1);
    let mut map = vec![usize::MAX; l1.order()];
    map[0] = 0;
    Ok(iso_search(l1, l2, &s1, &s2, &gens, 0, &mut map))
}

/// Isomorphism invariants of an element: whether it squares to 1, how many elements it
/// commutes with, and how many `y` satisfy `(x y) y = x (y y)`.
fn signature(l: &LoopTable) -> Vec<(bool, usize, usize)> {
    let n = l.order();
    (0..n)
        .map(|x| {
            let comm = (0..n).filter(|&y| l.mul(x, y) == l.mul(y, x)).count();
            let ralt = (0..n).filter(|&y| l.mul(l.mul(x, y), y) == l.mul(x, l.mul(y, y))).count();
            (l.mul(x, x) == 0, comm, ralt)
        })
        .collect()
}

/// A generating set picked greedily; in a finite loop, closure under the product is a
/// subloop.
fn loop_generators(l: &LoopTable) -> Vec<Elem> {
    let n = l.order();
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut gens = Vec::new();
    for x in 1..n {
        if inside[x] {
            continue;
        }
        gens.push(x);
        inside[x] = true;
        loop {
            let members: Vec<Elem> = (0..n).filter(|&y| inside[y]).collect();
            let mut grew = false;
            for &a in &members {
                for &b in &members {
                    let c = l.mul(a, b);
                    if !inside[c] {
                        inside[c] = true;
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
    }
    gens
}

fn iso_search(
    l1: &LoopTable,
    l2: &LoopTable,
    s1: &[(bool, usize, usize)],
    s2: &[(bool, usize, usize)],
    gens: &[Elem],
    k: usize,
    map: &mut Vec<Elem>,
) -> bool {
    if k == gens.len() {
        return true;
    }
    let x = gens[k];
    if map[x] != usize::MAX {
        return iso_search(l1, l2, s1, s2, gens, k + 1, map);
    }
    let used: Vec<bool> = {
        let mut u = vec![false; l2.order()];
        for &y in map.iter().filter(|&&y| y != usize::MAX) {
            u[y] = true;
        }
        u
    };
    for y in 0..l2.order() {
        if used[y] || s1[x] != s2[y] {
            continue;
        }
        let saved = map.clone();
        map[x] = y;
        if close_map(l1, l2, map) && iso_search(l1, l2, s1, s2, gens, k + 1, map) {
            return true;
        }
        *map = saved;
    }
    false
}

/// Extends a partial map along products until stable; false on a contradiction.
fn close_map(l1: &LoopTable, l2: &LoopTable, map: &mut [Elem]) -> bool {
    let n = l1.order();
    loop {
        let mut used = vec![usize::MAX; n];
        for x in 0..n {
            if map[x] != usize::MAX {
                if used[map[x]] != usize::MAX {
                    return false;
                }
                used[map[x]] = x;
            }
        }
        let known: Vec<Elem> = (0..n).filter(|&x| map[x] != usize::MAX).collect();
        let mut changed = false;
        for &a in &known {
            for &b in &known {
                let c = l1.mul(a, b);
                let img = l2.mul(map[a], map[b]);
                if map[c] == usize::MAX {
                    if used[img] != usize::MAX {
                        return false;
                    }
                    map[c] = img;
                    used[img] = c;
                    changed = true;
                } else if map[c] != img {
                    return false;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named::{abelian, cyclic};

    /// An order-5 loop that is not a group.
    fn nonassociative5() -> LoopTable {
        LoopTable::from_rows(
            &[
                vec![0, 1, 2, 3, 4],
                vec![1, 0, 3, 4, 2],
                vec![2, 4, 0, 1, 3],
                vec![3, 2, 4, 0, 1],
                vec![4, 3, 1, 2, 0],
            ],
            None,
        )
        .unwrap()
    }

    #[test]
    fn translations_of_cyclic_loop() {
        let l = LoopTable::from_group(&cyclic(3).unwrap());
        assert_eq!(l.right_translation(0), vec![0, 1, 2]);
        assert_eq!(l.right_translation(1), vec![1, 2, 0]);
        let rm = l.right_multiplication_group().unwrap();
        assert_eq!(rm.group.order(), 3);
        assert!(rm.stabilizer.is_trivial());
        assert!(rm.is_transitive());
    }

    #[test]
    fn order_five_loop_is_not_rcc() {
        let l = nonassociative5();
        l.check_invariants().unwrap();
        assert!(!l.is_associative());
        let (x, y) = l.rcc_violation().unwrap();
        assert!(x < 5 && y < 5);
    }

    #[test]
    fn identity_is_relocated() {
        let l = LoopTable::from_rows(&[vec![1, 0], vec![0, 1]], None).unwrap();
        assert_eq!(l.mul(0, 1), 1);
        assert!(LoopTable::from_rows(&[vec![0, 1], vec![0, 1]], None).is_err());
    }

    #[test]
    fn loop_isomorphism() {
        let c4 = LoopTable::from_group(&cyclic(4).unwrap());
        let v4 = LoopTable::from_group(&abelian(&[2, 2]).unwrap());
        assert!(loop_isomorphic(&c4, &c4).unwrap());
        assert!(!loop_isomorphic(&c4, &v4).unwrap());
        let l = nonassociative5();
        assert!(loop_isomorphic(&l, &l).unwrap());
        assert!(!loop_isomorphic(&l, &LoopTable::from_group(&cyclic(5).unwrap())).unwrap());
    }
}
