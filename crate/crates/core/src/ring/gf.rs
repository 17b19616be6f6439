//! GF(p^k) as ℤ/p[x] modulo a fixed monic irreducible polynomial.
//!
//! Elements are coefficient vectors of length `k`, highest degree first, so the
//! derived lexicographic order on vectors is the canonical enumeration order.
//! Polynomials used internally are lowest degree first.

use crate::error::{Error, Result};
use crate::numtheory::{add_mod, factorize, inverse_mod, is_prime, mul_mod, sub_mod};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaloisField {
    p: u64,
    k: u32,
    /// Monic, lowest degree first, length `k + 1`.
    modulus: Vec<u64>,
}

impl GaloisField {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidDescriptor(format!("GF({p},{k}): {p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidDescriptor(format!("GF({p},0): degree must be at least 1")));
        }
        let modulus = smallest_irreducible(p, k);
        Ok(GaloisField { p, k, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// The defining polynomial, lowest degree first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn order(&self) -> Option<u128> {
        (self.p as u128).checked_pow(self.k)
    }

    pub(crate) fn zero(&self) -> Vec<u64> {
        vec![0; self.k as usize]
    }

    pub(crate) fn embed_int(&self, x: i128) -> Vec<u64> {
        let mut v = self.zero();
        v[self.k as usize - 1] = x.rem_euclid(self.p as i128) as u64;
        v
    }

    pub(crate) fn contains(&self, a: &[u64]) -> bool {
        a.len() == self.k as usize && a.iter().all(|&c| c < self.p)
    }

    pub(crate) fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(&x, &y)| add_mod(x, y, self.p)).collect()
    }

    pub(crate) fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().map(|&x| sub_mod(0, x, self.p)).collect()
    }

    pub(crate) fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let prod = poly_mul(&to_poly(a), &to_poly(b), self.p);
        let r = poly_rem(&prod, &self.modulus, self.p);
        from_poly(&r, self.k)
    }

    pub(crate) fn inverse(&self, a: &[u64]) -> Option<Vec<u64>> {
        let a = to_poly(a);
        if a.is_empty() {
            return None;
        }
        // extended Euclid on (modulus, a)
        let p = self.p;
        let (mut r0, mut r1) = (self.modulus.clone(), a);
        let (mut t0, mut t1) = (Vec::<u64>::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1, p);
            let t2 = poly_sub(&t0, &poly_mul(&q, &t1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t2);
        }
        // r0 is a nonzero constant since the modulus is irreducible
        let c = inverse_mod(*r0.first()?, p)?;
        let inv = poly_scale(&t0, c, p);
        Some(from_poly(&poly_rem(&inv, &self.modulus, p), self.k))
    }
}

fn to_poly(a: &[u64]) -> Vec<u64> {
    let mut v: Vec<u64> = a.iter().rev().copied().collect();
    trim(&mut v);
    v
}

fn from_poly(a: &[u64], k: u32) -> Vec<u64> {
    let mut v = vec![0u64; k as usize];
    for (i, &c) in a.iter().enumerate() {
        v[k as usize - 1 - i] = c;
    }
    v
}

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| sub_mod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
        .collect();
    trim(&mut out);
    out
}

fn poly_scale(a: &[u64], c: u64, p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = a.iter().map(|&x| mul_mod(x, c, p)).collect();
    trim(&mut out);
    out
}

fn poly_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = inverse_mod(*b.last().unwrap(), p).expect("leading coefficient invertible mod p");
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = mul_mod(*r.last().unwrap(), lead_inv, p);
        q[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = sub_mod(r[shift + i], mul_mod(c, bc, p), p);
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    poly_divrem(a, b, p).1
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = std::mem::replace(&mut b, r);
    }
    a
}

fn poly_powmod(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = poly_rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &base, p), m, p);
        }
        base = poly_rem(&poly_mul(&base, &base, p), m, p);
        exp >>= 1;
    }
    acc
}

/// x^(p^j) mod f, by j successive p-th powers.
fn frobenius_iterate(j: u32, f: &[u64], p: u64) -> Vec<u64> {
    let mut h = poly_rem(&[0, 1], f, p);
    for _ in 0..j {
        h = poly_powmod(&h, p, f, p);
    }
    h
}

/// Rabin's irreducibility test for a monic polynomial of degree `k`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() as u32 - 1;
    if k == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let full = frobenius_iterate(k, f, p);
    if poly_sub(&full, &poly_rem(&x, f, p), p) != Vec::<u64>::new() {
        return false;
    }
    factorize(k as u64).iter().all(|&(q, _)| {
        let h = frobenius_iterate(k / q as u32, f, p);
        let g = poly_gcd(&poly_sub(&h, &x, p), f, p);
        g.len() == 1
    })
}

/// The lexicographically smallest monic irreducible polynomial of degree `k`
/// over ℤ/p, comparing the non-leading coefficients from degree `k-1` down.
fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    // odometer over (c_{k-1}, ..., c_0), rightmost (c_0) fastest
    let mut digits = vec![0u64; k as usize];
    loop {
        let mut f: Vec<u64> = digits.iter().rev().copied().collect();
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
        let mut i = k as usize;
        loop {
            // an irreducible polynomial of every degree exists, so this never runs off the end
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has_root(f: &[u64], p: u64) -> bool {
        (0..p).any(|x| f.iter().rev().fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p)) == 0)
    }

    #[test]
    fn known_moduli() {
        assert_eq!(GaloisField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(GaloisField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(GaloisField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(GaloisField::new(5, 1).unwrap().modulus(), &[0, 1]);
    }

    #[test]
    fn irreducibility_matches_root_test_for_small_degrees() {
        // degree 2 and 3 polynomials are irreducible iff they have no root
        for p in [2u64, 3, 5] {
            for k in [2usize, 3] {
                let count = p.pow(k as u32);
                for idx in 0..count {
                    let mut f: Vec<u64> = (0..k).map(|i| (idx / p.pow(i as u32)) % p).collect();
                    f.push(1);
                    assert_eq!(is_irreducible(&f, p), !has_root(&f, p), "p={p} f={f:?}");
                }
            }
        }
    }

    #[test]
    fn inverses_in_gf8_and_gf9() {
        for (p, k) in [(2u64, 3u32), (3, 2), (2, 4)] {
            let f = GaloisField::new(p, k).unwrap();
            let q = p.pow(k);
            for idx in 1..q {
                let a: Vec<u64> = (0..k).rev().map(|i| (idx / p.pow(i)) % p).collect();
                let inv = f.inverse(&a).unwrap();
                assert_eq!(f.mul(&a, &inv), f.embed_int(1));
            }
            assert_eq!(f.inverse(&f.zero()), None);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(GaloisField::new(4, 1).is_err());
        assert!(GaloisField::new(3, 0).is_err());
    }
}
