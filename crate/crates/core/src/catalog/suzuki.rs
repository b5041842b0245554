//! The point stabiliser of the Suzuki group `Sz(q)`, `q = 2^(2m+1)`: lower unitriangular
//! matrices `S(a, b)` extended by the diagonal torus `M(λ)`.

use super::field::{FieldElem, FiniteField};
use crate::error::{Error, Result};
use crate::group::perm::close_under;
use crate::group::set::ElementSet;
use crate::group::table::{GroupTable, DEFAULT_MAX_ORDER};

/// A 4×4 matrix over the field, row-major.
pub type Matrix4 = [FieldElem; 16];

#[derive(Clone, Debug)]
pub struct SuzukiStabilizer {
    pub field: FiniteField,
    pub table: GroupTable,
    pub matrices: Vec<Matrix4>,
    /// `{S(a, b)}`, the Frobenius kernel.
    pub kernel: ElementSet,
    /// `{M(λ)}`, the Frobenius complement.
    pub complement: ElementSet,
}

fn mat_mul(f: &FiniteField, x: &Matrix4, y: &Matrix4) -> Matrix4 {
    let mut out = [0; 16];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = 0;
            for k in 0..4 {
                acc = f.add(acc, f.mul(x[i * 4 + k], y[k * 4 + j]));
            }
            out[i * 4 + j] = acc;
        }
    }
    out
}

/// `S(a, b)` as displayed in the construction.
pub fn s_matrix(f: &FiniteField, a: FieldElem, b: FieldElem) -> Result<Matrix4> {
    let pa = f.suzuki_pi(a)?;
    let pb = f.suzuki_pi(b)?;
    let a2 = f.mul(a, a);
    let r30 = f.add(f.add(f.mul(pa, a2), f.mul(a, b)), pb);
    let r31 = f.add(f.mul(pa, a), b);
    Ok([
        1, 0, 0, 0, //
        a, 1, 0, 0, //
        b, pa, 1, 0, //
        r30, r31, a, 1,
    ])
}

/// `M(λ) = diag(λ^{1+2^m}, λ^{2^m}, λ^{−2^m}, λ^{−1−2^m})`.
pub fn m_matrix(f: &FiniteField, m: u32, lambda: FieldElem) -> Matrix4 {
    let e = 1i64 << m;
    let mut out = [0; 16];
    out[0] = f.pow(lambda, 1 + e);
    out[5] = f.pow(lambda, e);
    out[10] = f.pow(lambda, -e);
    out[15] = f.pow(lambda, -1 - e);
    out
}

/// The group `𝔉ℌ` for `q = 2^(2m+1)`; only `m = 1` (`q = 8`, order 448) fits the
/// default order bound.
pub fn suzuki_point_stabilizer(m: u32) -> Result<SuzukiStabilizer> {
    if m == 0 {
        return Err(Error::PreconditionFailed("m must be positive".into()));
    }
    let k = 2 * m as usize + 1;
    if k > 6 || 1usize << (3 * k) > DEFAULT_MAX_ORDER * 8 {
        return Err(Error::OrderBoundExceeded(DEFAULT_MAX_ORDER));
    }
    let f = FiniteField::new(2, k)?;
    let q = f.order();
    if q * q * (q - 1) > DEFAULT_MAX_ORDER {
        return Err(Error::OrderBoundExceeded(DEFAULT_MAX_ORDER));
    }
    let mut gens: Vec<Matrix4> = Vec::new();
    let mut kernel_mats = Vec::new();
    for a in f.elements() {
        for b in f.elements() {
            let s = s_matrix(&f, a, b)?;
            kernel_mats.push(s);
            if (a, b) != (0, 0) {
                gens.push(s);
            }
        }
    }
    let torus: Vec<Matrix4> = (1..q).map(|l| m_matrix(&f, m, l)).collect();
    gens.extend(torus.iter().skip(1).copied());
    let identity = s_matrix(&f, 0, 0)?;
    let (matrices, mul) = close_under(identity, &gens, |x, y| mat_mul(&f, x, y), DEFAULT_MAX_ORDER)?;
    let n = matrices.len();
    let labels = (0..n).map(|i| format!("g{i}")).collect();
    let table = GroupTable::from_trusted(n, mul, labels);
    let in_set = |set: &[Matrix4]| ElementSet::from_members(n, (0..n).filter(|&i| set.contains(&matrices[i])));
    let kernel = in_set(&kernel_mats).into_subgroup(&table)?;
    let complement = in_set(&torus).into_subgroup(&table)?;
    Ok(SuzukiStabilizer { field: f, table, matrices, kernel, complement })
}
