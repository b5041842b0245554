//! Standard small groups.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::perm::{build_from_generators, identity_perm, parse_cycles, Perm};
use crate::group::product::{direct_product, semidirect_product, Action};
use crate::group::table::{GroupTable, DEFAULT_MAX_ORDER};

fn bounded(order: usize) -> Result<()> {
    if order > DEFAULT_MAX_ORDER || order == 0 {
        Err(Error::OrderBoundExceeded(DEFAULT_MAX_ORDER))
    } else {
        Ok(())
    }
}

fn from_rule(n: usize, labels: Vec<String>, rule: impl Fn(usize, usize) -> usize) -> GroupTable {
    let mut mul = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = rule(a, b);
        }
    }
    GroupTable::from_trusted(n, mul, labels)
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => base.into(),
        _ => format!("{base}^{k}"),
    }
}

/// `C_n = ⟨a⟩`, with element `k` equal to `a^k`.
pub fn cyclic(n: usize) -> Result<GroupTable> {
    bounded(n)?;
    Ok(from_rule(n, (0..n).map(|k| power_label("a", k)).collect(), |a, b| (a + b) % n))
}

/// `C_{m_1} × ⋯ × C_{m_r}`, elements ordered lexicographically by coordinates.
pub fn abelian(orders: &[usize]) -> Result<GroupTable> {
    let total = orders.iter().try_fold(1usize, |acc, &m| acc.checked_mul(m)).unwrap_or(usize::MAX);
    bounded(total)?;
    let mut g = Arc::new(cyclic(1)?);
    for &m in orders {
        g = direct_product(&g, &Arc::new(cyclic(m)?))?.group;
    }
    let labels = (0..total)
        .map(|mut x| {
            let mut coords = vec![0; orders.len()];
            for (i, &m) in orders.iter().enumerate().rev() {
                coords[i] = x % m;
                x /= m;
            }
            format!("({})", coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
        })
        .collect();
    Ok(Arc::try_unwrap(g).unwrap_or_else(|a| (*a).clone()).with_labels(labels))
}

/// Dihedral group of order `order = 2n`, elements `r^i f^j` at index `j·n + i`, with
/// `f r f = r^{-1}`.
pub fn dihedral(order: usize) -> Result<GroupTable> {
    if order % 2 != 0 {
        return Err(Error::PreconditionFailed("dihedral order must be even".into()));
    }
    bounded(order)?;
    let n = order / 2;
    let labels = (0..order)
        .map(|x| {
            let (i, j) = (x % n, x / n);
            match (i, j) {
                (0, 0) => "1".to_string(),
                (_, 0) => power_label("r", i),
                (0, 1) => "f".into(),
                _ => format!("{}f", power_label("r", i)),
            }
        })
        .collect();
    Ok(from_rule(order, labels, |a, b| {
        let (i, j) = (a % n, a / n);
        let (k, l) = (b % n, b / n);
        let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
        ((j + l) % 2) * n + rot
    }))
}

/// Dicyclic group of order `4n`: `⟨a, x | a^{2n} = 1, x² = a^n, x⁻¹ax = a⁻¹⟩`, elements
/// `a^i x^j` at index `j·2n + i`. `dicyclic(8)` is the quaternion group.
pub fn dicyclic(order: usize) -> Result<GroupTable> {
    if order % 4 != 0 {
        return Err(Error::PreconditionFailed("dicyclic order must be a multiple of 4".into()));
    }
    bounded(order)?;
    let n = order / 4;
    let m = 2 * n;
    let labels = (0..order)
        .map(|x| {
            let (i, j) = (x % m, x / m);
            match (i, j) {
                (0, 0) => "1".to_string(),
                (_, 0) => power_label("a", i),
                (0, 1) => "x".into(),
                _ => format!("{}x", power_label("a", i)),
            }
        })
        .collect();
    Ok(from_rule(order, labels, |a, b| {
        let (i, j) = (a % m, a / m);
        let (k, l) = (b % m, b / m);
        match (j, l) {
            (0, _) => l * m + (i + k) % m,
            (1, 0) => m + (i + m - k) % m,
            _ => (i + m - k + n) % m,
        }
    }))
}

/// `Sym(n)` acting on `0..n`.
pub fn symmetric(n: usize) -> Result<GroupTable> {
    if n > 5 {
        return Err(Error::OrderBoundExceeded(DEFAULT_MAX_ORDER));
    }
    if n <= 1 {
        return build_from_generators(n.max(1), &[identity_perm(n.max(1))]);
    }
    let cycle: String = format!("({})", (0..n).map(|i| i.to_string()).collect::<Vec<_>>().join(" "));
    let gens: Vec<Perm> = vec![parse_cycles(&cycle, n)?, parse_cycles("(0 1)", n)?];
    build_from_generators(n, &gens)
}

/// `Alt(n)`, generated by the 3-cycles `(0 1 i)`.
pub fn alternating(n: usize) -> Result<GroupTable> {
    if n > 5 {
        return Err(Error::OrderBoundExceeded(DEFAULT_MAX_ORDER));
    }
    if n <= 2 {
        return build_from_generators(n.max(1), &[identity_perm(n.max(1))]);
    }
    let gens: Vec<Perm> = (2..n).map(|i| parse_cycles(&format!("(0 1 {i})"), n)).collect::<Result<_>>()?;
    build_from_generators(n, &gens)
}

/// `C_p ≀ C_2 = C_2 ⋉ (C_p × C_p)`, the swap action.
pub fn wreath_cyclic_c2(p: usize) -> Result<GroupTable> {
    bounded(2 * p * p)?;
    let base = Arc::new(abelian(&[p, p])?);
    let c2 = Arc::new(cyclic(2)?);
    let swap: Vec<usize> = (0..p * p).map(|x| (x % p) * p + x / p).collect();
    let act = Action::from_cyclic_generator(&c2, &base, &swap)?;
    Ok(Arc::try_unwrap(semidirect_product(&c2, &base, &act)?.group).unwrap_or_else(|a| (*a).clone()))
}

/// `C_m ⋉ C_n` where the generator of `C_m` acts by `x ↦ kx`; needs `k^m ≡ 1 (mod n)`.
pub fn cyclic_semidirect(m: usize, n: usize, k: usize) -> Result<GroupTable> {
    bounded(m * n)?;
    let cm = Arc::new(cyclic(m)?);
    let cn = Arc::new(cyclic(n)?);
    let image: Vec<usize> = (0..n).map(|x| x * k % n).collect();
    let act = Action::from_cyclic_generator(&cm, &cn, &image)?;
    Ok(Arc::try_unwrap(semidirect_product(&cm, &cn, &act)?.group).unwrap_or_else(|a| (*a).clone()))
}

/// The Heisenberg group of order `p³` (exponent `p` for odd `p`): `C_p ⋉ (C_p × C_p)`
/// with `(x, y) ↦ (x, x + y)`.
pub fn heisenberg(p: usize) -> Result<GroupTable> {
    bounded(p * p * p)?;
    let base = Arc::new(abelian(&[p, p])?);
    let cp = Arc::new(cyclic(p)?);
    let shear: Vec<usize> = (0..p * p).map(|z| (z / p) * p + (z / p + z % p) % p).collect();
    let act = Action::from_cyclic_generator(&cp, &base, &shear)?;
    Ok(Arc::try_unwrap(semidirect_product(&cp, &base, &act)?.group).unwrap_or_else(|a| (*a).clone()))
}
