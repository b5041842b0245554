//! Cyclic extensions of prime degree.
//!
//! A group `G` with a normal subgroup `N` of prime index `p` is determined by `N`, the
//! automorphism `σ: x ↦ g x g⁻¹` induced by an element `g ∉ N`, and `z = g^p ∈ N`; the
//! data must satisfy `σ(z) = z` and `σ^p = (x ↦ z x z⁻¹)`, and conversely every such pair
//! `(σ, z)` defines a group. Every solvable group has a normal subgroup of prime index, so
//! iterating this construction from the trivial group reaches every solvable group.

use std::collections::HashSet;

use crate::group::iso::{extend_generator_map, signatures};
use crate::error::{Error, Result};
use crate::group::ops::generators_of;
use crate::group::set::ElementSet;
use crate::group::sylow::is_prime;
use crate::group::table::{Elem, GroupTable, DEFAULT_MAX_ORDER};

/// An automorphism as its list of images.
pub type Automorphism = Vec<Elem>;

/// Every automorphism of `G`, the identity first, in a deterministic order.
pub fn automorphisms(g: &GroupTable) -> Vec<Automorphism> {
    let gens = generators_of(g, &ElementSet::whole(g.order()));
    let sig = signatures(g);
    let candidates: Vec<Vec<Elem>> =
        gens.iter().map(|&x| g.elements().filter(|&y| sig[y] == sig[x]).collect()).collect();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    collect(g, &gens, &candidates, &mut images, &mut out);
    // the identity map is found first only if every generator is its own first candidate
    if let Some(pos) = out.iter().position(|a| a.iter().enumerate().all(|(i, &x)| i == x)) {
        let id = out.remove(pos);
        out.insert(0, id);
    }
    out
}

fn collect(g: &GroupTable, gens: &[Elem], candidates: &[Vec<Elem>], images: &mut Vec<Elem>, out: &mut Vec<Automorphism>) {
    let k = images.len();
    if k == gens.len() {
        if let Some(img) = extend_generator_map(g, g, gens, images) {
            out.push(img);
        }
        return;
    }
    for &y in &candidates[k] {
        images.push(y);
        if extend_generator_map(g, g, &gens[..=k], images).is_some() {
            collect(g, gens, candidates, images, out);
        }
        images.pop();
    }
}

fn compose(a: &[Elem], b: &[Elem]) -> Automorphism {
    // x ↦ a(b(x))
    b.iter().map(|&y| a[y]).collect()
}

fn inverse(a: &[Elem]) -> Automorphism {
    let mut inv = vec![0; a.len()];
    for (x, &y) in a.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

fn power(a: &[Elem], k: usize) -> Automorphism {
    (0..k).fold((0..a.len()).collect(), |acc: Automorphism, _| compose(a, &acc))
}

/// `x ↦ z x z⁻¹`.
fn inner(g: &GroupTable, z: Elem) -> Automorphism {
    g.elements().map(|x| g.mul(g.mul(z, x), g.inv(z))).collect()
}

/// The elements `z` with `σ(z) = z` and `σ^p = (x ↦ z x z⁻¹)`.
fn admissible_powers(g: &GroupTable, sigma: &[Elem], p: usize) -> Vec<Elem> {
    let sp = power(sigma, p);
    g.elements().filter(|&z| sigma[z] == z && inner(g, z) == sp).collect()
}

/// The extension `⟨N, g⟩` with `g x g⁻¹ = σ(x)` and `g^p = z`. Element `i·|N| + x`
/// stands for `x g^i`.
pub fn cyclic_extension(n: &GroupTable, p: usize, sigma: &[Elem], z: Elem) -> Result<GroupTable> {
    let m = n.order();
    if !is_prime(p) || sigma.len() != m || z >= m {
        return Err(Error::PreconditionFailed("cyclic_extension needs a prime degree and data on N".into()));
    }
    if m * p > DEFAULT_MAX_ORDER {
        return Err(Error::OrderBoundExceeded(DEFAULT_MAX_ORDER));
    }
    let mut seen = vec![false; m];
    for (x, &y) in sigma.iter().enumerate() {
        if y >= m || seen[y] || (x == 0) != (y == 0) {
            return Err(Error::PreconditionFailed("σ is not a bijection of N".into()));
        }
        seen[y] = true;
    }
    if n.elements().any(|a| n.elements().any(|b| sigma[n.mul(a, b)] != n.mul(sigma[a], sigma[b]))) {
        return Err(Error::PreconditionFailed("σ is not an automorphism of N".into()));
    }
    if sigma[z] != z || inner(n, z) != power(sigma, p) {
        return Err(Error::PreconditionFailed("g^p = z is incompatible with σ".into()));
    }
    let powers: Vec<Automorphism> = (0..p).map(|i| power(sigma, i)).collect();
    let rows: Vec<Vec<Elem>> = (0..m * p)
        .map(|u| {
            let (i, a) = (u / m, u % m);
            (0..m * p)
                .map(|v| {
                    let (j, b) = (v / m, v % m);
                    let c = n.mul(a, powers[i][b]);
                    if i + j < p {
                        (i + j) * m + c
                    } else {
                        (i + j - p) * m + n.mul(c, z)
                    }
                })
                .collect()
        })
        .collect();
    GroupTable::from_table(&rows, None)
}

/// Representatives of the extension data `(σ, z)` of `N` by `C_p`, up to the action of
/// `Aut(N)` (`α·(σ, z) = (ασα⁻¹, α(z))`), which preserves the isomorphism type. The
/// split extension with `σ = 1, z = 1` comes first.
pub fn extension_data(n: &GroupTable, p: usize) -> Vec<(Automorphism, Elem)> {
    let auts = automorphisms(n);
    let inverses: Vec<Automorphism> = auts.iter().map(|a| inverse(a)).collect();
    let mut seen: HashSet<Automorphism> = HashSet::new();
    let mut out = Vec::new();
    for sigma in &auts {
        if seen.contains(sigma) {
            continue;
        }
        let zs = admissible_powers(n, sigma, p);
        let mut stabilizer = Vec::new();
        for (a, ai) in auts.iter().zip(&inverses) {
            let c = compose(a, &compose(sigma, ai));
            if &c == sigma {
                stabilizer.push(a);
            }
            seen.insert(c);
        }
        let mut covered = vec![false; n.order()];
        for z in zs {
            if covered[z] {
                continue;
            }
            for a in &stabilizer {
                covered[a[z]] = true;
            }
            out.push((sigma.clone(), z));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named::{abelian, cyclic, dihedral};

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&cyclic(8).unwrap()).len(), 4);
        assert_eq!(automorphisms(&abelian(&[2, 2]).unwrap()).len(), 6);
        assert_eq!(automorphisms(&abelian(&[2, 2, 2]).unwrap()).len(), 168);
        assert_eq!(automorphisms(&dihedral(8).unwrap()).len(), 8);
        assert_eq!(automorphisms(&dihedral(6).unwrap()).len(), 6);
        let a = automorphisms(&cyclic(5).unwrap());
        assert_eq!(a[0], vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn extensions_of_c4_by_c2() {
        // C8, C4xC2, D8 and Q8 all contain a cyclic subgroup of index 2
        let n = cyclic(4).unwrap();
        let data = extension_data(&n, 2);
        assert_eq!(data[0].1, 0);
        let groups: Vec<GroupTable> = data.iter().map(|(s, z)| cyclic_extension(&n, 2, s, *z).unwrap()).collect();
        assert!(groups.iter().all(|g| g.order() == 8));
        let abelian_count = groups.iter().filter(|g| g.is_abelian()).count();
        assert!(abelian_count >= 2 && groups.len() >= 4);
    }

    #[test]
    fn rejects_incompatible_data() {
        let n = cyclic(3).unwrap();
        // z = 1 has order 3 but σ = inversion needs σ(z) = z
        assert!(cyclic_extension(&n, 2, &[0, 2, 1], 1).is_err());
        assert!(cyclic_extension(&n, 4, &[0, 1, 2], 0).is_err());
        assert!(cyclic_extension(&n, 2, &[0, 2, 1], 0).unwrap().order() == 6);
    }
}
