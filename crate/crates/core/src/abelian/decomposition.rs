//! Invariant-factor decomposition of finite abelian groups.

use crate::error::{Error, Result};
use crate::group::lattice::all_subgroups;
use crate::group::ops::generated_subgroup;
use crate::group::set::ElementSet;
use crate::group::sylow::{p_component, prime_divisors};
use crate::group::table::{Elem, GroupTable};

/// `G = ⟨a_1⟩ × ⋯ × ⟨a_r⟩` with `|a_i| = m_i`, `m_j | m_{j−1}`, `m_r > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianDecomposition {
    pub generators: Vec<Elem>,
    pub orders: Vec<usize>,
}

impl AbelianDecomposition {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// `Π a_i^{e_i}`.
    pub fn element(&self, g: &GroupTable, exponents: &[usize]) -> Elem {
        self.generators.iter().zip(exponents).fold(0, |acc, (&a, &e)| g.mul(acc, g.pow(a, e)))
    }

    /// Exponent vector of every element of the decomposed subgroup (`None` outside it).
    pub fn coordinates(&self, g: &GroupTable) -> Vec<Option<Vec<usize>>> {
        let mut coords = vec![None; g.order()];
        let mut e = vec![0; self.orders.len()];
        loop {
            coords[self.element(g, &e)] = Some(e.clone());
            // odometer increment
            let mut i = 0;
            while i < e.len() {
                e[i] += 1;
                if e[i] < self.orders[i] {
                    break;
                }
                e[i] = 0;
                i += 1;
            }
            if i == e.len() {
                return coords;
            }
        }
    }
}

pub(crate) fn require_abelian(g: &GroupTable, s: &ElementSet) -> Result<()> {
    if s.iter().all(|x| s.iter().all(|y| g.mul(x, y) == g.mul(y, x))) {
        Ok(())
    } else {
        Err(Error::NotAbelian)
    }
}

/// Decomposition of `G` itself.
pub fn invariant_factor_decomposition(g: &GroupTable) -> Result<AbelianDecomposition> {
    decompose_subgroup(g, &ElementSet::whole(g.order()))
}

/// Decomposition of an abelian subgroup `A ≤ G`.
///
/// Each step takes the smallest-index element `a` of maximal order in what is left and a
/// complement `K` of `⟨a⟩`: a subgroup maximal subject to `K ∩ ⟨a⟩ = 1` is one, and it is
/// built greedily (smallest indices first). Should the greedy result ever fall short,
/// the subgroups of the right order are searched exhaustively.
pub fn decompose_subgroup(g: &GroupTable, a: &ElementSet) -> Result<AbelianDecomposition> {
    require_abelian(g, a)?;
    let orders = g.element_orders();
    let mut generators = Vec::new();
    let mut factor_orders = Vec::new();
    let mut rest = a.clone();
    while rest.len() > 1 {
        let top = rest.iter().map(|x| orders[x]).max().unwrap();
        let x = rest.iter().find(|&x| orders[x] == top).unwrap();
        let cyc = generated_subgroup(g, &[x]);
        let k = complement_in(g, &rest, &cyc);
        generators.push(x);
        factor_orders.push(top);
        rest = k;
    }
    Ok(AbelianDecomposition { generators, orders: factor_orders })
}

/// A complement of the cyclic subgroup `c` (of maximal order) inside abelian `a`.
pub(crate) fn complement_in(g: &GroupTable, a: &ElementSet, c: &ElementSet) -> ElementSet {
    let want = a.len() / c.len();
    let mut k = ElementSet::trivial(g.order());
    let mut gens: Vec<Elem> = Vec::new();
    for y in a.iter() {
        if k.len() == want {
            break;
        }
        if k.contains(y) {
            continue;
        }
        gens.push(y);
        let next = generated_subgroup(g, &gens);
        if next.intersect(c).is_trivial() {
            k = next;
        } else {
            gens.pop();
        }
    }
    if k.len() == want {
        return k;
    }
    let (sub, emb) = crate::group::ops::induced_subgroup(g, a).expect("subgroup");
    all_subgroups(&sub)
        .expect("abelian groups here are small")
        .into_iter()
        .map(|s| s.map(g.order(), |x| emb[x]))
        .find(|s| s.len() == want && s.intersect(c).is_trivial())
        .map(|s| ElementSet::from_mask(s.mask().to_vec(), true))
        .expect("a cyclic subgroup of maximal order has a complement")
}

/// `rk(G)` for abelian `G`: the largest number of invariant factors of a Sylow
/// subgroup (0 for the trivial group).
pub fn abelian_rank(g: &GroupTable) -> Result<usize> {
    require_abelian(g, &ElementSet::whole(g.order()))?;
    let mut r = 0;
    for p in prime_divisors(g.order()) {
        r = r.max(decompose_subgroup(g, &p_component(g, p))?.rank());
    }
    Ok(r)
}
