//! Permutation models of the small groups used throughout the oracle tests.
#![allow(dead_code)]

use std::sync::Arc;

use loopforge::folder::Transversal;
use loopforge::group::perm::{parse_cycles, perm_group};
use loopforge::group::{ElementSet, GroupTable, PermGroup};

/// A permutation group with named generators.
pub struct Model {
    pub pg: PermGroup,
    pub group: Arc<GroupTable>,
}

impl Model {
    pub fn new(degree: usize, gens: &[&str]) -> Self {
        let perms: Vec<_> = gens.iter().map(|c| parse_cycles(c, degree).unwrap()).collect();
        let pg = perm_group(degree, &perms, 512).unwrap();
        let group = Arc::new(pg.table.clone());
        Model { pg, group }
    }

    /// Index of the permutation written in cycle notation.
    pub fn el(&self, cycles: &str) -> usize {
        let p = parse_cycles(cycles, self.pg.degree()).unwrap();
        self.pg.index_of(&p).unwrap_or_else(|| panic!("{cycles} not in the group"))
    }

    /// Product of a word in elements, left to right.
    pub fn word(&self, xs: &[usize]) -> usize {
        xs.iter().fold(0, |acc, &x| self.group.mul(acc, x))
    }

    pub fn sub(&self, gens: &[usize]) -> ElementSet {
        loopforge::group::generated_subgroup(&self.group, gens)
    }

    pub fn set(&self, xs: &[usize]) -> ElementSet {
        ElementSet::from_members(self.group.order(), xs.iter().copied())
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }
}

/// `S_3` on three points.
pub fn s3() -> Model {
    Model::new(3, &["(0 1 2)", "(0 1)"])
}

/// `D_8 = ⟨s, t | s² = t² = (st)⁴ = 1⟩` with `s = (0 1)(2 3)`, `t = (1 2)`.
pub fn d8() -> Model {
    Model::new(4, &["(0 1)(2 3)", "(1 2)"])
}

/// `D_12 = ⟨s, t⟩` with `s` a rotation of order 6 and `t` a reflection.
pub fn d12() -> Model {
    Model::new(6, &["(0 1 2 3 4 5)", "(1 5)(2 4)"])
}

/// The quaternion group acting regularly on eight points.
pub fn q8() -> Model {
    Model::new(8, &["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"])
}

/// `C_3 ≀ C_2`, of order 18.
pub fn c3_wr_c2() -> Model {
    Model::new(6, &["(0 1 2)", "(0 3)(1 4)(2 5)"])
}

/// The two `D_8`-invariant transversals of `⟨s⟩` containing 1: `{1, t, sts, tsts}` and
/// `{1, st, ts, tsts}`.
pub fn d8_transversals(m: &Model) -> (ElementSet, [Transversal; 2]) {
    let s = m.el("(0 1)(2 3)");
    let t = m.el("(1 2)");
    let t1 = Transversal::new([0, t, m.word(&[s, t, s]), m.word(&[t, s, t, s])]);
    let t2 = Transversal::new([0, m.word(&[s, t]), m.word(&[t, s]), m.word(&[t, s, t, s])]);
    (m.sub(&[s]), [t1, t2])
}
