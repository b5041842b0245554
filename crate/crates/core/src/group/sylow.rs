//! Sylow subgroups.

use super::ops::{generated_subgroup, normalizer};
use super::set::ElementSet;
use super::table::{Elem, GroupTable};

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: usize, p: usize) -> usize {
    let mut m = n;
    let mut pk = 1;
    while p > 1 && m % p == 0 {
        m /= p;
        pk *= p;
    }
    pk
}

pub fn is_power_of(n: usize, p: usize) -> bool {
    p > 1 && p_part(n, p) == n
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && prime_divisors(n) == [n]
}

/// `O_p(G) = {x : ord(x) is a power of p}` for abelian `G`.
pub fn p_component(g: &GroupTable, p: usize) -> ElementSet {
    let orders = g.element_orders();
    ElementSet::subgroup_from_mask(orders.iter().map(|&o| o == 1 || is_power_of(o, p)).collect())
}

/// A Sylow `p`-subgroup (the trivial subgroup if `p ∤ |G|`).
///
/// Abelian groups return their unique `p`-component. Otherwise a `p`-subgroup `P` is
/// grown one factor `p` at a time by adjoining some `x ∈ N_G(P) − P` with `x^p ∈ P`.
pub fn sylow_subgroup(g: &GroupTable, p: usize) -> ElementSet {
    if g.is_abelian() {
        return p_component(g, p);
    }
    let target = p_part(g.order(), p);
    let mut gens: Vec<Elem> = Vec::new();
    let mut current = ElementSet::trivial(g.order());
    while current.len() < target {
        let n = normalizer(g, &current);
        let x = n
            .iter()
            .find(|&x| !current.contains(x) && current.contains(g.pow(x, p)))
            .expect("a non-Sylow p-subgroup has a p-element in its normalizer quotient");
        gens.push(x);
        current = generated_subgroup(g, &gens);
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named::{cyclic, symmetric};

    #[test]
    fn components_of_c12() {
        let g = cyclic(12).unwrap();
        assert_eq!(sylow_subgroup(&g, 2).len(), 4);
        assert_eq!(sylow_subgroup(&g, 3).len(), 3);
        assert_eq!(sylow_subgroup(&g, 5).len(), 1);
    }

    #[test]
    fn s4_sylows() {
        let g = symmetric(4).unwrap();
        let p2 = sylow_subgroup(&g, 2);
        assert_eq!(p2.len(), 8);
        assert!(super::super::ops::is_subgroup(&g, &p2));
        assert_eq!(sylow_subgroup(&g, 3).len(), 3);
    }

    #[test]
    fn number_theory() {
        assert_eq!(prime_divisors(360), vec![2, 3, 5]);
        assert_eq!(p_part(360, 2), 8);
        assert!(is_prime(7) && !is_prime(1) && !is_prime(9));
    }
}
