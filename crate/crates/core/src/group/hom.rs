use std::sync::Arc;

use super::set::ElementSet;
use super::table::{Elem, GroupTable};
use crate::error::{Error, Result};

/// A homomorphism between two tables, stored as the image of every source element.
#[derive(Clone, Debug)]
pub struct GroupHomomorphism {
    source: Arc<GroupTable>,
    target: Arc<GroupTable>,
    image_of: Vec<Elem>,
}

impl GroupHomomorphism {
    /// Validates the homomorphism law on all pairs.
    pub fn new(source: Arc<GroupTable>, target: Arc<GroupTable>, image_of: Vec<Elem>) -> Result<Self> {
        if image_of.len() != source.order() || image_of.iter().any(|&y| y >= target.order()) {
            return Err(Error::NotAHomomorphism("image list has wrong length or range".into()));
        }
        if image_of[0] != 0 {
            return Err(Error::NotAHomomorphism("identity not preserved".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if image_of[source.mul(a, b)] != target.mul(image_of[a], image_of[b]) {
                    return Err(Error::NotAHomomorphism(format!("fails on ({a}, {b})")));
                }
            }
        }
        Ok(GroupHomomorphism { source, target, image_of })
    }

    pub(crate) fn new_trusted(source: Arc<GroupTable>, target: Arc<GroupTable>, image_of: Vec<Elem>) -> Self {
        GroupHomomorphism { source, target, image_of }
    }

    pub fn source(&self) -> &Arc<GroupTable> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GroupTable> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.image_of[x]
    }

    pub fn images(&self) -> &[Elem] {
        &self.image_of
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.image_of.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }

    pub fn kernel(&self) -> ElementSet {
        ElementSet::subgroup_from_mask(self.image_of.iter().map(|&y| y == 0).collect())
    }

    pub fn image_set(&self, s: &ElementSet) -> ElementSet {
        s.map(self.target.order(), |x| self.image_of[x])
    }

    pub fn image(&self) -> ElementSet {
        ElementSet::subgroup_from_mask({
            let mut m = vec![false; self.target.order()];
            for &y in &self.image_of {
                m[y] = true;
            }
            m
        })
    }

    /// Re-checks the homomorphism law on all pairs.
    pub fn check(&self) -> bool {
        self.source
            .elements()
            .all(|a| self.source.elements().all(|b| self.image_of[self.source.mul(a, b)] == self.target.mul(self.image_of[a], self.image_of[b])))
    }
}
