use std::fmt;

use super::table::{Elem, GroupTable};
use crate::error::{Error, Result};

/// A subset of a group's elements, stored both as a sorted member list and as a mask.
///
/// `is_subgroup` is only ever set by constructors that established closure.
#[derive(Clone)]
pub struct ElementSet {
    members: Vec<Elem>,
    mask: Vec<bool>,
    is_subgroup: bool,
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", if self.is_subgroup { "Subgroup" } else { "Set" }, self.members)
    }
}

/// Equality and hashing look at membership only; the subgroup flag is derived data.
impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask
    }
}

impl Eq for ElementSet {}

impl std::hash::Hash for ElementSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mask.hash(state);
    }
}

impl ElementSet {
    /// Arbitrary subset; duplicates are merged and members sorted.
    pub fn from_members(order: usize, members: impl IntoIterator<Item = Elem>) -> Self {
        let mut mask = vec![false; order];
        for m in members {
            mask[m] = true;
        }
        Self::from_mask(mask, false)
    }

    pub(crate) fn from_mask(mask: Vec<bool>, is_subgroup: bool) -> Self {
        let members = mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
        ElementSet { members, mask, is_subgroup }
    }

    pub(crate) fn subgroup_from_mask(mask: Vec<bool>) -> Self {
        Self::from_mask(mask, true)
    }

    /// Checks closure and marks the set as a subgroup.
    pub fn into_subgroup(self, g: &GroupTable) -> Result<Self> {
        if is_subgroup_of(g, &self) {
            Ok(ElementSet { is_subgroup: true, ..self })
        } else {
            Err(Error::NotSubgroup)
        }
    }

    pub fn trivial(order: usize) -> Self {
        Self::from_mask((0..order).map(|x| x == 0).collect(), true)
    }

    pub fn whole(order: usize) -> Self {
        Self::from_mask(vec![true; order], true)
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask[x]
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subgroup(&self) -> bool {
        self.is_subgroup
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members == [0]
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// Intersection; a subgroup if both operands are.
    pub fn intersect(&self, other: &ElementSet) -> ElementSet {
        let mask = self.mask.iter().zip(&other.mask).map(|(a, b)| *a && *b).collect();
        Self::from_mask(mask, self.is_subgroup && other.is_subgroup)
    }

    /// Set difference `self − other` (never a subgroup).
    pub fn minus(&self, other: &ElementSet) -> ElementSet {
        let mask = self.mask.iter().zip(&other.mask).map(|(a, b)| *a && !*b).collect();
        Self::from_mask(mask, false)
    }

    /// Set of right conjugates `{x^g : x ∈ self}`.
    pub fn conjugate(&self, g: &GroupTable, by: Elem) -> ElementSet {
        let mut mask = vec![false; self.mask.len()];
        for &x in &self.members {
            mask[g.conj(x, by)] = true;
        }
        Self::from_mask(mask, self.is_subgroup)
    }

    /// Elementwise product set `{ab : a ∈ self, b ∈ other}`.
    pub fn product(&self, g: &GroupTable, other: &ElementSet) -> ElementSet {
        let mut mask = vec![false; self.mask.len()];
        for &a in &self.members {
            for &b in &other.members {
                mask[g.mul(a, b)] = true;
            }
        }
        Self::from_mask(mask, false)
    }

    /// Member-wise image under a map of element indices (used with embeddings).
    pub fn map(&self, target_order: usize, f: impl Fn(Elem) -> Elem) -> ElementSet {
        let mut mask = vec![false; target_order];
        for &x in &self.members {
            mask[f(x)] = true;
        }
        Self::from_mask(mask, false)
    }
}

pub(crate) fn is_subgroup_of(g: &GroupTable, s: &ElementSet) -> bool {
    if !s.contains(0) {
        return false;
    }
    s.members.iter().all(|&a| s.contains(g.inv(a)) && s.members.iter().all(|&b| s.contains(g.mul(a, b))))
}
