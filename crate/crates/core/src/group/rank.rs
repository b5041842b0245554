//! Minimal generating-set size.

use super::ops::{distinct_conjugates, generated_subgroup};
use super::set::ElementSet;
use super::table::{Elem, GroupTable};

/// `rk(G)`, the size of a smallest generating set (0 for the trivial group).
///
/// Abelian groups use the invariant-factor count; everything else goes through
/// [`brute_force_rank`].
pub fn rank(g: &GroupTable) -> usize {
    if g.is_abelian() {
        crate::abelian::abelian_rank(g).expect("abelian input")
    } else {
        brute_force_rank(g)
    }
}

/// Increasing-size search over generating sets.
///
/// Only one generator per cyclic subgroup is considered, and the first generator is
/// taken up to conjugacy (a conjugate of a generating set generates).
pub fn brute_force_rank(g: &GroupTable) -> usize {
    let n = g.order();
    if n == 1 {
        return 0;
    }
    let orders = g.element_orders();
    if orders.contains(&n) {
        return 1;
    }
    // one generator per cyclic subgroup, larger subgroups first
    let mut cyclic_reps: Vec<Elem> = Vec::new();
    let mut seen: Vec<ElementSet> = Vec::new();
    let mut by_order: Vec<Elem> = (1..n).collect();
    by_order.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
    for x in by_order {
        let c = generated_subgroup(g, &[x]);
        if !seen.contains(&c) {
            seen.push(c);
            cyclic_reps.push(x);
        }
    }
    // the first generator only matters up to conjugacy of its cyclic subgroup
    let mut first: Vec<Elem> = Vec::new();
    let mut covered: Vec<ElementSet> = Vec::new();
    for (c, &x) in seen.iter().zip(&cyclic_reps) {
        if covered.contains(c) {
            continue;
        }
        first.push(x);
        covered.extend(distinct_conjugates(g, c).into_iter().map(|(_, d)| d));
    }
    for k in 2.. {
        for &x in &first {
            let start = generated_subgroup(g, &[x]);
            if search(g, &cyclic_reps, &mut vec![x], start, k) {
                return k;
            }
        }
    }
    unreachable!("every group is generated by its elements")
}

fn search(g: &GroupTable, reps: &[Elem], chosen: &mut Vec<Elem>, current: ElementSet, k: usize) -> bool {
    if current.len() == g.order() {
        return true;
    }
    if chosen.len() == k {
        return false;
    }
    for &y in reps {
        if current.contains(y) {
            continue;
        }
        chosen.push(y);
        let next = generated_subgroup(g, chosen);
        let ok = search(g, reps, chosen, next, k);
        chosen.pop();
        if ok {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named::{abelian, cyclic, dihedral, symmetric};

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&cyclic(1).unwrap()), 0);
        assert_eq!(rank(&cyclic(7).unwrap()), 1);
        assert_eq!(brute_force_rank(&abelian(&[2, 2]).unwrap()), 2);
        assert_eq!(rank(&abelian(&[2, 3]).unwrap()), 1);
        assert_eq!(brute_force_rank(&abelian(&[2, 2, 2]).unwrap()), 3);
        assert_eq!(rank(&symmetric(4).unwrap()), 2);
        assert_eq!(rank(&dihedral(12).unwrap()), 2);
    }
}
