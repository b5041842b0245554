//! Direct and semidirect products, quotients.

use std::sync::Arc;

use super::hom::GroupHomomorphism;
use super::ops::{is_normal, right_coset_ids};
use super::set::ElementSet;
use super::table::{Elem, GroupTable, DEFAULT_MAX_ORDER};
use crate::error::{Error, Result};

/// A product group with its two canonical embeddings.
#[derive(Clone, Debug)]
pub struct Product {
    pub group: Arc<GroupTable>,
    pub left: GroupHomomorphism,
    pub right: GroupHomomorphism,
}

impl Product {
    /// Index of the pair `(a, b)`; the element order is lexicographic.
    #[inline]
    pub fn pair(&self, a: Elem, b: Elem) -> Elem {
        a * self.right.source().order() + b
    }

    /// Components of a product element.
    #[inline]
    pub fn split(&self, x: Elem) -> (Elem, Elem) {
        let m = self.right.source().order();
        (x / m, x % m)
    }
}

/// An action of `G` on `Q` by automorphisms, from the right: `q^(gh) = (q^g)^h`.
#[derive(Clone, Debug)]
pub struct Action {
    /// `images[g][q] = q^g`.
    images: Vec<Vec<Elem>>,
}

impl Action {
    pub fn trivial(g: &GroupTable, q: &GroupTable) -> Self {
        Action { images: vec![(0..q.order()).collect(); g.order()] }
    }

    /// Validates that every `images[g]` is an automorphism of `Q` and that the map is a
    /// right action.
    pub fn new(g: &GroupTable, q: &GroupTable, images: Vec<Vec<Elem>>) -> Result<Self> {
        if images.len() != g.order() || images.iter().any(|p| p.len() != q.order()) {
            return Err(Error::NotAnAction("wrong shape".into()));
        }
        for (x, p) in images.iter().enumerate() {
            if !super::perm::is_permutation(p) {
                return Err(Error::NotAnAction(format!("element {x} does not act bijectively")));
            }
            for a in q.elements() {
                for b in q.elements() {
                    if p[q.mul(a, b)] != q.mul(p[a], p[b]) {
                        return Err(Error::NotAnAction(format!("element {x} is not an automorphism")));
                    }
                }
            }
        }
        if images[0].iter().enumerate().any(|(i, &v)| i != v) {
            return Err(Error::NotAnAction("identity acts nontrivially".into()));
        }
        for a in g.elements() {
            for b in g.elements() {
                let ab = g.mul(a, b);
                if q.elements().any(|y| images[ab][y] != images[b][images[a][y]]) {
                    return Err(Error::NotAnAction(format!("not compatible with ({a}, {b})")));
                }
            }
        }
        Ok(Action { images })
    }

    /// Action of a cyclic group `C_m = ⟨c⟩` in which `c` acts through the automorphism
    /// `gen_image` of `Q`; element `k` of the table must be `c^k` (as in catalog cyclics).
    pub fn from_cyclic_generator(g: &GroupTable, q: &GroupTable, gen_image: &[Elem]) -> Result<Self> {
        let m = g.order();
        let mut images = Vec::with_capacity(m);
        let mut cur: Vec<Elem> = (0..q.order()).collect();
        for _ in 0..m {
            images.push(cur.clone());
            cur = cur.iter().map(|&y| gen_image[y]).collect();
        }
        // images[k] is the k-th power; reorder to table indices.
        let c = 1.min(m - 1);
        let mut by_index = vec![Vec::new(); m];
        let mut x = 0;
        for img in images {
            by_index[x] = img;
            x = g.mul(x, c);
        }
        if by_index.iter().any(|v| v.is_empty()) {
            return Err(Error::NotAnAction("group is not cyclic on element 1".into()));
        }
        Action::new(g, q, by_index)
    }

    #[inline]
    pub fn act(&self, q: Elem, g: Elem) -> Elem {
        self.images[g][q]
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(|p| p.iter().enumerate().all(|(i, &v)| i == v))
    }

    /// Whether `g` acts as the identity on `Q`.
    pub fn acts_trivially(&self, g: Elem) -> bool {
        self.images[g].iter().enumerate().all(|(i, &v)| i == v)
    }
}

pub fn direct_product(g1: &Arc<GroupTable>, g2: &Arc<GroupTable>) -> Result<Product> {
    direct_product_bounded(g1, g2, DEFAULT_MAX_ORDER)
}

pub fn direct_product_bounded(g1: &Arc<GroupTable>, g2: &Arc<GroupTable>, max_order: usize) -> Result<Product> {
    semidirect_product_bounded(g1, g2, &Action::trivial(g1, g2), max_order)
}

pub fn semidirect_product(g: &Arc<GroupTable>, q: &Arc<GroupTable>, action: &Action) -> Result<Product> {
    semidirect_product_bounded(g, q, action, DEFAULT_MAX_ORDER)
}

/// `G ⋉ Q` with multiplication `(g, q)(g', q') = (gg', q^{g'} q')`.
pub fn semidirect_product_bounded(
    g: &Arc<GroupTable>,
    q: &Arc<GroupTable>,
    action: &Action,
    max_order: usize,
) -> Result<Product> {
    let (n, m) = (g.order(), q.order());
    if n * m > max_order {
        return Err(Error::OrderBoundExceeded(max_order));
    }
    let total = n * m;
    let mut mul = vec![0; total * total];
    for a in 0..total {
        let (ga, qa) = (a / m, a % m);
        for b in 0..total {
            let (gb, qb) = (b / m, b % m);
            mul[a * total + b] = g.mul(ga, gb) * m + q.mul(action.act(qa, gb), qb);
        }
    }
    let labels = (0..total).map(|x| format!("({},{})", g.label(x / m), q.label(x % m))).collect();
    let group = Arc::new(GroupTable::from_trusted(total, mul, labels));
    let left = GroupHomomorphism::new_trusted(g.clone(), group.clone(), (0..n).map(|x| x * m).collect());
    let right = GroupHomomorphism::new_trusted(q.clone(), group.clone(), (0..m).collect());
    Ok(Product { group, left, right })
}

/// `G/N` with its projection. Cosets are indexed by their smallest element's order of
/// appearance, so `N` itself is the identity.
pub fn quotient(g: &Arc<GroupTable>, n: &ElementSet) -> Result<(Arc<GroupTable>, GroupHomomorphism)> {
    if !super::ops::is_subgroup(g, n) {
        return Err(Error::NotSubgroup);
    }
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let ids = right_coset_ids(g, n);
    let k = g.order() / n.len();
    let mut reps = vec![usize::MAX; k];
    for x in g.elements() {
        if reps[ids[x]] == usize::MAX {
            reps[ids[x]] = x;
        }
    }
    let mut mul = vec![0; k * k];
    for a in 0..k {
        for b in 0..k {
            mul[a * k + b] = ids[g.mul(reps[a], reps[b])];
        }
    }
    let labels = reps.iter().map(|&r| format!("N{}", g.label(r))).collect();
    let table = Arc::new(GroupTable::from_trusted(k, mul, labels));
    let proj = GroupHomomorphism::new_trusted(g.clone(), table.clone(), ids);
    Ok((table, proj))
}
