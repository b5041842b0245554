use std::fmt;

use crate::error::{Error, Result};

/// Index of an element inside its parent [`GroupTable`]. The identity is always `0`.
pub type Elem = usize;

/// Largest group order any constructor will produce unless told otherwise.
pub const DEFAULT_MAX_ORDER: usize = 512;

/// Tables up to this order are checked for associativity triple by triple.
pub const DEFAULT_ASSOCIATIVITY_BOUND: usize = 512;

/// A finite group stored as its Cayley table.
///
/// Rows and columns are permutations of `0..order`, the identity sits at index 0 and
/// `mul(x, inv(x)) == 0`. Tables are immutable once built; every subgroup, coset or
/// map elsewhere in the crate refers to elements by their index here.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<Elem>,
    inv: Vec<Elem>,
    labels: Vec<String>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable").field("order", &self.order).finish_non_exhaustive()
    }
}

impl GroupTable {
    /// Validates a user-supplied table. See [`GroupTable::from_table_with_bound`].
    pub fn from_table(rows: &[Vec<Elem>], labels: Option<Vec<String>>) -> Result<Self> {
        Self::from_table_with_bound(rows, labels, DEFAULT_ASSOCIATIVITY_BOUND)
    }

    /// Validates a table and relocates its identity to index 0.
    ///
    /// Associativity is checked exhaustively when `order <= assoc_bound`; larger tables
    /// are accepted on the Latin-square, identity and inverse checks alone.
    pub fn from_table_with_bound(
        rows: &[Vec<Elem>],
        labels: Option<Vec<String>>,
        assoc_bound: usize,
    ) -> Result<Self> {
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

        let e = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or(Error::NoIdentity)?;

        // relabel so that the identity becomes index 0
        let perm: Vec<usize> = (0..n)
            .map(|x| if x == 0 { e } else if x == e { 0 } else { x })
            .collect();
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = perm[rows[perm[a]][perm[b]]];
            }
        }
        let labels = match labels {
            Some(l) if l.len() == n => (0..n).map(|x| l[perm[x]].clone()).collect(),
            _ => (0..n).map(|x| format!("g{}", perm[x])).collect(),
        };

        let mut inv = vec![0; n];
        for x in 0..n {
            let y = (0..n).find(|&y| mul[x * n + y] == 0).expect("latin row contains identity");
            if mul[y * n + x] != 0 {
                return Err(Error::NoInverse(perm[x]));
            }
            inv[x] = y;
        }

        let table = GroupTable { order: n, mul, inv, labels };
        if n <= assoc_bound {
            if let Some((a, b, c)) = table.associativity_violation() {
                return Err(Error::NotAssociative(perm[a], perm[b], perm[c]));
            }
        }
        Ok(table)
    }

    /// Builds a table from a multiplication known to be a group law with identity 0.
    ///
    /// Used by internal constructors (products, quotients, closures) whose associativity
    /// holds by construction. Inverses are derived from the table.
    pub(crate) fn from_trusted(order: usize, mul: Vec<Elem>, labels: Vec<String>) -> Self {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![0; order];
        for x in 0..order {
            inv[x] = (0..order).find(|&y| mul[x * order + y] == 0).expect("identity in every row");
        }
        let t = GroupTable { order, mul, inv, labels };
        debug_assert!(t.mul(0, order - 1) == order - 1);
        t
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        GroupTable { order: 1, mul: vec![0], inv: vec![0], labels: vec!["1".into()] }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    /// `g⁻¹ x g`, the right conjugate `x^g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv[g], x), g)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    #[inline]
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv[a], self.inv[b]), self.mul(a, b))
    }

    pub fn pow(&self, x: Elem, k: usize) -> Elem {
        let mut acc = 0;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|x| self.element_order(x)).collect()
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn row(&self, a: Elem) -> &[Elem] {
        &self.mul[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        (0..self.order).map(|a| self.row(a).to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// First triple `(a, b, c)` with `(ab)c != a(bc)`, if any.
    pub fn associativity_violation(&self) -> Option<(Elem, Elem, Elem)> {
        let n = self.order;
        for a in 1..n {
            for b in 1..n {
                let ab = self.mul(a, b);
                for c in 1..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Re-checks every table invariant. Intended for tests and debug assertions.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.order;
        check_latin(n, |r, c| self.mul(r, c))?;
        if (0..n).any(|x| self.mul(0, x) != x || self.mul(x, 0) != x) {
            return Err(Error::NoIdentity);
        }
        if let Some(x) = (0..n).find(|&x| self.mul(x, self.inv[x]) != 0) {
            return Err(Error::NoInverse(x));
        }
        if let Some((a, b, c)) = self.associativity_violation() {
            return Err(Error::NotAssociative(a, b, c));
        }
        Ok(())
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = labels;
        self
    }
}

pub(crate) fn check_latin(n: usize, at: impl Fn(usize, usize) -> usize) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for r in 0..n {
        for c in 0..n {
            let v = at(r, c);
            if seen[v] == r {
                return Err(Error::NotLatinSquare(r));
            }
            seen[v] = r;
        }
    }
    let mut seen = vec![usize::MAX; n];
    for c in 0..n {
        for r in 0..n {
            let v = at(r, c);
            if seen[v] == c {
                return Err(Error::NotLatinSquare(c));
            }
            seen[v] = c;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_table_is_valid() {
        let g = GroupTable::from_table(&[vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
        g.check_invariants().unwrap();
    }

    #[test]
    fn identity_is_relocated_to_zero() {
        // Z3 written with identity at index 2
        let rows = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let labels = vec!["a".to_string(), "b".into(), "e".into()];
        let g = GroupTable::from_table(&rows, Some(labels)).unwrap();
        assert_eq!(g.label(0), "e");
        assert_eq!(g.row(0), &[0, 1, 2]);
        g.check_invariants().unwrap();
    }

    #[test]
    fn rejects_non_latin_and_missing_identity() {
        assert_eq!(
            GroupTable::from_table(&[vec![0, 0], vec![1, 0]], None),
            Err(Error::NotLatinSquare(0))
        );
        // latin square without identity
        let rows = vec![vec![1, 0], vec![0, 1]];
        assert!(GroupTable::from_table(&rows, None).is_ok());
        let rows = vec![vec![1, 2, 0], vec![0, 1, 2], vec![2, 0, 1]];
        assert_eq!(GroupTable::from_table(&rows, None), Err(Error::NoIdentity));
    }

    #[test]
    fn rejects_one_sided_inverse() {
        // loop of order 5 in which 1*2 = 0 but 2*1 != 0
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 3, 0, 4, 2],
            vec![2, 4, 3, 0, 1],
            vec![3, 0, 4, 2, 1],
            vec![4, 2, 1, 1, 0],
        ];
        // not latin (col 3 repeats) so the latin check fires first
        assert!(matches!(GroupTable::from_table(&rows, None), Err(Error::NotLatinSquare(_))));
    }

    #[test]
    fn powers_and_orders() {
        let rows: Vec<Vec<usize>> = (0..6).map(|a| (0..6).map(|b| (a + b) % 6).collect()).collect();
        let g = GroupTable::from_table(&rows, None).unwrap();
        assert_eq!(g.pow(1, 4), 4);
        assert_eq!(g.element_order(2), 3);
        assert_eq!(g.element_orders(), vec![1, 6, 3, 2, 3, 6]);
        assert!(g.is_abelian());
    }
}
