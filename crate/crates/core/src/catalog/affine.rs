//! The affine groups `Aff(1, q)` of maps `t_{α,β}: x ↦ αx + β`.

use super::field::{FieldElem, FiniteField};
use crate::error::{Error, Result};
use crate::group::set::ElementSet;
use crate::group::sylow::prime_divisors;
use crate::group::table::{Elem, GroupTable};

/// Largest field order for which affine groups are built.
pub const MAX_AFFINE_Q: usize = 64;

/// `Aff(1, q)` together with the coordinates of each element.
#[derive(Clone, Debug)]
pub struct AffineGroup {
    pub field: FiniteField,
    pub table: GroupTable,
    /// `coords[x] = (α, β)` for `x = t_{α,β}`.
    pub coords: Vec<(FieldElem, FieldElem)>,
}

impl AffineGroup {
    pub fn q(&self) -> usize {
        self.field.order()
    }

    pub fn index_of(&self, alpha: FieldElem, beta: FieldElem) -> Elem {
        debug_assert!(alpha != 0);
        (alpha - 1) * self.q() + beta
    }

    /// The translations `P = {t_{1,β}}`.
    pub fn translations(&self) -> ElementSet {
        ElementSet::subgroup_from_mask(self.coords.iter().map(|&(a, _)| a == 1).collect())
    }

    /// The point stabiliser `L = {t_{α,0}}`.
    pub fn linear_part(&self) -> ElementSet {
        ElementSet::subgroup_from_mask(self.coords.iter().map(|&(_, b)| b == 0).collect())
    }

    /// The unique subgroup of order `d` of the cyclic group `L` (`d | q − 1`).
    pub fn linear_subgroup(&self, d: usize) -> Result<ElementSet> {
        let q = self.q();
        if d == 0 || (q - 1) % d != 0 {
            return Err(Error::PreconditionFailed(format!("{d} does not divide {}", q - 1)));
        }
        let e = ((q - 1) / d) as i64;
        let alphas: Vec<FieldElem> = (1..q).map(|a| self.field.pow(a, e)).collect();
        let mut mask = vec![false; self.table.order()];
        for a in alphas {
            mask[self.index_of(a, 0)] = true;
        }
        Ok(ElementSet::subgroup_from_mask(mask))
    }

    /// `L'P` for the subgroup `L' ≤ L` of order `d`.
    pub fn translation_extension(&self, d: usize) -> Result<ElementSet> {
        let l = self.linear_subgroup(d)?;
        let mask = self.coords.iter().map(|&(a, _)| l.contains(self.index_of(a, 0))).collect();
        Ok(ElementSet::subgroup_from_mask(mask))
    }

    /// Right-hand side of the conjugation formula:
    /// `t_{α,β}^{-1} t_{γ,δ} t_{α,β} = t_{γ, α⁻¹βγ + α⁻¹δ − α⁻¹β}`.
    pub fn conjugation_formula(&self, x: Elem, g: Elem) -> Elem {
        let f = &self.field;
        let (alpha, beta) = self.coords[g];
        let (gamma, delta) = self.coords[x];
        let ai = f.inv(alpha).expect("α ≠ 0");
        let t1 = f.mul(f.mul(ai, beta), gamma);
        let t2 = f.mul(ai, delta);
        let t3 = f.mul(ai, beta);
        self.index_of(gamma, f.sub(f.add(t1, t2), t3))
    }
}

/// `Aff(1, q)` for a prime power `q ≤ 64`, multiplied by composition
/// `t_{α,β} ∘ t_{γ,δ} = t_{αγ, αδ+β}`. Element `t_{α,β}` sits at index
/// `(α − 1)·q + β` (field codes), so `t_{1,0}` is the identity and the first `q`
/// elements are the translations.
pub fn affine_group(q: usize) -> Result<AffineGroup> {
    let primes = prime_divisors(q);
    if q < 2 || q > MAX_AFFINE_Q || primes.len() != 1 {
        return Err(Error::PreconditionFailed(format!("q = {q} is not a prime power ≤ {MAX_AFFINE_Q}")));
    }
    let p = primes[0];
    let k = (q as f64).log(p as f64).round() as usize;
    let field = FiniteField::new(p, k)?;
    let n = q * (q - 1);
    let coords: Vec<(FieldElem, FieldElem)> = (0..n).map(|x| (x / q + 1, x % q)).collect();
    let index = |a: FieldElem, b: FieldElem| (a - 1) * q + b;
    let mut mul = vec![0; n * n];
    for x in 0..n {
        let (a, b) = coords[x];
        for y in 0..n {
            let (c, d) = coords[y];
            mul[x * n + y] = index(field.mul(a, c), field.add(field.mul(a, d), b));
        }
    }
    let labels = coords.iter().map(|&(a, b)| format!("t({},{})", field.label(a), field.label(b))).collect();
    let table = GroupTable::from_trusted(n, mul, labels);
    Ok(AffineGroup { field, table, coords })
}
