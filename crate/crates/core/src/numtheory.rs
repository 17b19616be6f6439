//! Integer helpers for residue rings: gcd, modular inverses, factorization and CRT.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[inline]
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 + b as u128) % n as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, n: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        n - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `n` by the extended Euclidean algorithm.
pub fn inverse_mod(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % n as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(n as i128) as u64)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Product of the distinct primes dividing `n`.
pub fn radical(n: u64) -> u64 {
    factorize(n).iter().map(|&(p, _)| p).product()
}

/// If `q = p^k` for a prime `p` and `k >= 1`, returns `(p, k)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// p-adic valuation of `x` as a residue modulo `p^e`; zero has valuation `e`.
pub fn valuation(mut x: u64, p: u64, e: u32) -> u32 {
    if x == 0 {
        return e;
    }
    let mut v = 0;
    while x.is_multiple_of(p) && v < e {
        x /= p;
        v += 1;
    }
    v
}

/// Combines residues modulo pairwise coprime moduli into the residue modulo their product.
pub fn crt(residues: &[u64], moduli: &[u64]) -> u64 {
    debug_assert_eq!(residues.len(), moduli.len());
    let mut acc = 0u64;
    let mut modulus = 1u64;
    for (&r, &m) in residues.iter().zip(moduli) {
        // acc + modulus * t ≡ r (mod m)
        let inv = inverse_mod(modulus % m, m).expect("CRT moduli must be coprime");
        let t = mul_mod(sub_mod(r % m, acc % m, m), inv, m);
        let next = modulus as u128 * m as u128;
        acc = ((acc as u128 + modulus as u128 * t as u128) % next) as u64;
        modulus = next as u64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_matches_search() {
        for n in 1..40u64 {
            for a in 0..n {
                let found = (0..n).find(|&b| mul_mod(a, b, n) == 1 % n);
                assert_eq!(inverse_mod(a, n), found, "a={a} n={n}");
            }
        }
    }

    #[test]
    fn factorization_and_radical() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(radical(360), 30);
        assert_eq!(radical(7), 7);
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert!(is_prime(65537));
        assert!(!is_prime(65535));
    }

    #[test]
    fn crt_recombines() {
        let moduli = [4, 3, 5];
        for x in 0..60 {
            let residues: Vec<u64> = moduli.iter().map(|m| x % m).collect();
            assert_eq!(crt(&residues, &moduli), x);
        }
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(0, 2, 3), 3);
        assert_eq!(valuation(4, 2, 3), 2);
        assert_eq!(valuation(3, 3, 2), 1);
        assert_eq!(valuation(5, 3, 2), 0);
    }
}
