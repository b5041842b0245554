//! Finite fields `GF(p^k)` in a polynomial basis.
//!
//! An element is stored as the integer `Σ c_i p^i` of its coefficient vector
//! `(c_0, …, c_{k−1})`, so `0` and `1` are the field's zero and one. Multiplication goes
//! through discrete-log tables built from a primitive element found at construction.

use crate::error::{Error, Result};
use crate::group::sylow::is_prime;

/// Largest field order accepted.
pub const MAX_FIELD_ORDER: usize = 4096;

pub type FieldElem = usize;

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: usize,
    k: usize,
    /// Monic modulus, lowest coefficient first (`k + 1` entries).
    modulus: Vec<usize>,
    q: usize,
    exp: Vec<FieldElem>,
    log: Vec<usize>,
}

/// Built-in irreducible moduli, lowest coefficient first.
fn builtin_modulus(p: usize, k: usize) -> Option<Vec<usize>> {
    Some(match (p, k) {
        (_, 1) => vec![0, 1],
        (2, 2) => vec![1, 1, 1],
        (2, 3) => vec![1, 1, 0, 1],
        (2, 4) => vec![1, 1, 0, 0, 1],
        (2, 5) => vec![1, 0, 1, 0, 0, 1],
        (2, 6) => vec![1, 1, 0, 0, 0, 0, 1],
        (3, 2) => vec![1, 0, 1],
        (5, 2) => vec![2, 0, 1],
        (7, 2) => vec![1, 0, 1],
        _ => return None,
    })
}

impl FiniteField {
    /// `GF(p^k)` with the shipped modulus.
    pub fn new(p: usize, k: usize) -> Result<Self> {
        let modulus = builtin_modulus(p, k).ok_or(Error::NoBuiltinModulus { p: p as u32, k: k as u32 })?;
        Self::with_modulus(p, k, modulus)
    }

    /// `GF(p^k)` with a caller-supplied monic modulus (lowest coefficient first).
    pub fn with_modulus(p: usize, k: usize, modulus: Vec<usize>) -> Result<Self> {
        if !is_prime(p) || k == 0 {
            return Err(Error::PreconditionFailed(format!("GF({p}^{k}) needs a prime p and k ≥ 1")));
        }
        let q = p.checked_pow(k as u32).filter(|&q| q <= MAX_FIELD_ORDER).ok_or(Error::OrderBoundExceeded(MAX_FIELD_ORDER))?;
        if modulus.len() != k + 1 || modulus[k] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::ReducibleModulus(p as u32));
        }
        if !is_irreducible(p, &modulus) {
            return Err(Error::ReducibleModulus(p as u32));
        }
        let mut f = FiniteField { p, k, modulus, q, exp: Vec::new(), log: Vec::new() };
        f.build_log_tables()?;
        Ok(f)
    }

    fn build_log_tables(&mut self) -> Result<()> {
        let q = self.q;
        if q == 2 {
            self.exp = vec![1];
            self.log = vec![0, 0];
            return Ok(());
        }
        for g in 2..q {
            let mut exp = Vec::with_capacity(q - 1);
            let mut log = vec![usize::MAX; q];
            let mut x = 1;
            for i in 0..q - 1 {
                if log[x] != usize::MAX {
                    break;
                }
                log[x] = i;
                exp.push(x);
                x = self.slow_mul(x, g);
            }
            if exp.len() == q - 1 && x == 1 {
                self.exp = exp;
                self.log = log;
                return Ok(());
            }
        }
        // an irreducible modulus always yields a cyclic multiplicative group
        Err(Error::ReducibleModulus(self.p as u32))
    }

    fn digits(&self, mut x: FieldElem) -> Vec<usize> {
        let mut d = vec![0; self.k];
        for c in d.iter_mut() {
            *c = x % self.p;
            x /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[usize]) -> FieldElem {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// Schoolbook product reduced by the modulus; only used to build the log tables.
    fn slow_mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let (p, k) = (self.p, self.k);
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c != 0 {
                for i in 0..=k {
                    let sub = c * self.modulus[i] % p;
                    prod[deg - k + i] = (prod[deg - k + i] + p - sub) % p;
                }
            }
        }
        self.undigits(&prod[..k])
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    pub fn elements(&self) -> std::ops::Range<FieldElem> {
        0..self.q
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElem {
        self.exp[1 % self.exp.len()]
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.p == 2 {
            return a ^ b;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.undigits(&s)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.p == 2 {
            return a;
        }
        let d: Vec<usize> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.undigits(&d)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        (a != 0).then(|| self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)])
    }

    /// `a^e` for any integer exponent (negative exponents need `a ≠ 0`).
    pub fn pow(&self, a: FieldElem, e: i64) -> FieldElem {
        if a == 0 {
            assert!(e >= 0, "zero has no negative powers");
            return if e == 0 { 1 } else { 0 };
        }
        let n = (self.q - 1) as i64;
        self.exp[((self.log[a] as i64 * e).rem_euclid(n)) as usize]
    }

    /// `x^(p^e)`, the `e`-th power of the Frobenius automorphism.
    pub fn frobenius_power(&self, x: FieldElem, e: u32) -> FieldElem {
        self.pow(x, (self.p as i64).pow(e))
    }

    /// For `q = 2^(2m+1)`: the automorphism `π(x) = x^(2^(m+1))`, the unique one with
    /// `π(π(x)) = x²`.
    pub fn suzuki_pi(&self, x: FieldElem) -> Result<FieldElem> {
        if self.p != 2 || self.k % 2 == 0 {
            return Err(Error::PreconditionFailed("π needs q = 2^(2m+1)".into()));
        }
        let m = (self.k as u32 - 1) / 2;
        Ok(self.frobenius_power(x, m + 1))
    }

    /// Compact label: the integer code for prime fields, else the coefficient string
    /// (highest degree first), e.g. `011` for `a + 1` in `GF(8)`.
    pub fn label(&self, x: FieldElem) -> String {
        if self.k == 1 {
            x.to_string()
        } else {
            self.digits(x).iter().rev().map(|c| c.to_string()).collect()
        }
    }
}

/// No roots, and no monic factor of degree `2..=deg/2` (exhaustive trial division).
fn is_irreducible(p: usize, f: &[usize]) -> bool {
    let n = f.len() - 1;
    for d in 1..=n / 2 {
        // all monic polynomials of degree d
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push(c % p);
                c /= p;
            }
            g.push(1);
            if poly_rem(p, f, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `f` modulo monic `g` over `GF(p)`.
fn poly_rem(p: usize, f: &[usize], g: &[usize]) -> Vec<usize> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for (i, &c) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = FiniteField::new(5, 1).unwrap();
        assert_eq!(f.inv(2), Some(3));
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn every_builtin_field_is_a_field() {
        for (p, k) in [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (5, 2), (7, 2), (11, 1)] {
            let f = FiniteField::new(p, k).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
            // distributivity on a sample
            for a in f.elements().step_by(3) {
                for b in f.elements().step_by(5) {
                    for c in f.elements().step_by(7) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x² + 1 = (x + 1)² over GF(2)
        assert_eq!(FiniteField::with_modulus(2, 2, vec![1, 0, 1]).unwrap_err(), Error::ReducibleModulus(2));
        // x⁴ + x² + 1 = (x² + x + 1)² has no roots but a quadratic factor
        assert!(FiniteField::with_modulus(2, 4, vec![1, 0, 1, 0, 1]).is_err());
        assert!(matches!(FiniteField::new(3, 3), Err(Error::NoBuiltinModulus { p: 3, k: 3 })));
    }

    #[test]
    fn suzuki_automorphism_in_gf8() {
        let f = FiniteField::new(2, 3).unwrap();
        for x in f.elements() {
            let pi = f.suzuki_pi(x).unwrap();
            assert_eq!(pi, f.pow(x, 4));
            assert_eq!(f.suzuki_pi(pi).unwrap(), f.mul(x, x));
        }
        let g2 = FiniteField::new(2, 1).unwrap();
        assert_eq!(g2.suzuki_pi(0).unwrap(), 0);
        assert_eq!(g2.suzuki_pi(1).unwrap(), 1);
    }
}
