//! Independent reference implementations used to check the library.
//!
//! Nothing here calls the library's elimination, reduction, sumset or factor logic;
//! only ring element arithmetic (`add`, `mul`, ...) and enumeration are shared.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twinring::{Element, Matrix, RingDescriptor};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(text: &str) -> RingDescriptor {
    text.parse().unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn random_matrix(ring: &RingDescriptor, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let data = (0..n * n).map(|_| ring.random_element(rng)).collect();
    Matrix::new(ring.clone(), n, n, data).unwrap()
}

/// All permutations of `0..n` with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, even: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        if rest.is_empty() {
            out.push((prefix.clone(), even));
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            // moving rest[i] to the front of `rest` takes i transpositions
            go(prefix, rest, even ^ (i % 2 == 1), out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), true, &mut out);
    out
}

/// Leibniz expansion.
pub fn leibniz_det(m: &Matrix) -> Element {
    let r = m.ring();
    let n = m.rows();
    let mut acc = r.zero();
    for (perm, even) in permutations(n) {
        let mut term = r.one();
        for (i, &j) in perm.iter().enumerate() {
            term = r.mul(&term, &m[(i, j)]);
        }
        acc = if even { r.add(&acc, &term) } else { r.sub(&acc, &term) };
    }
    acc
}

pub fn is_unit_by_search(ring: &RingDescriptor, x: &Element) -> bool {
    let one = ring.one();
    ring.elements(1 << 16)
        .unwrap()
        .iter()
        .any(|y| ring.mul(x, y) == one && ring.mul(y, x) == one)
}

/// A matrix over a commutative ring is invertible iff its determinant is a unit.
pub fn invertible_by_det(m: &Matrix) -> bool {
    let d = leibniz_det(m);
    let r = m.ring();
    r.elements(1 << 16).unwrap().iter().any(|y| r.mul(&d, y) == r.one())
}

/// Rank over a field: the largest k with a nonzero k×k minor.
pub fn rank_by_minors(m: &Matrix) -> usize {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }
    let r = m.ring();
    for k in (1..=m.rows().min(m.cols())).rev() {
        for rows in subsets(m.rows(), k) {
            for cols in subsets(m.cols(), k) {
                let data = rows.iter().flat_map(|&i| cols.iter().map(move |&j| (i, j))).map(|ij| m[ij].clone()).collect();
                let minor = Matrix::new(r.clone(), k, k, data).unwrap();
                if !r.is_zero(&leibniz_det(&minor)) {
                    return k;
                }
            }
        }
    }
    0
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub fn zn_units(n: u64) -> Vec<u64> {
    (1..n).filter(|&u| gcd(u, n) == 1).collect()
}

/// Twin-goodness of ℤ/n by plain integer search.
pub fn zn_twin_good(n: u64) -> bool {
    let units = zn_units(n);
    (0..n).all(|x| {
        units.iter().any(|&u| gcd((x + u) % n, n) == 1 && gcd((x + n - u) % n, n) == 1)
    })
}

/// Sums of exactly `k` units of ℤ/n, by nested enumeration of all k-tuples.
pub fn zn_sumset_nested(n: u64, k: usize) -> Vec<bool> {
    let units = zn_units(n);
    let mut hit = vec![false; n as usize];
    fn go(units: &[u64], n: u64, left: usize, acc: u64, hit: &mut [bool]) {
        if left == 0 {
            hit[acc as usize] = true;
            return;
        }
        for &u in units {
            go(units, n, left - 1, (acc + u) % n, hit);
        }
    }
    go(&units, n, k, 0, &mut hit);
    hit
}

/// Sums of exactly `k` units of an arbitrary ring, by nested enumeration.
pub fn sumset_nested(ring: &RingDescriptor, k: usize) -> Vec<Element> {
    let elems = ring.elements(1 << 16).unwrap();
    let units: Vec<Element> = elems.iter().filter(|x| is_unit_by_search(ring, x)).cloned().collect();
    let mut out = std::collections::BTreeSet::new();
    fn go(r: &RingDescriptor, units: &[Element], left: usize, acc: Element, out: &mut std::collections::BTreeSet<Element>) {
        if left == 0 {
            out.insert(acc);
            return;
        }
        for u in units {
            go(r, units, left - 1, r.add(&acc, u), out);
        }
    }
    go(ring, &units, k, ring.zero(), &mut out);
    out.into_iter().collect()
}

/// Addition and multiplication tables over element indices.
struct Tables {
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

impl Tables {
    fn new(ring: &RingDescriptor) -> Self {
        let elems = ring.elements(1 << 16).unwrap();
        let index: std::collections::HashMap<&Element, usize> = elems.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let table = |f: &dyn Fn(&Element, &Element) -> Element| -> Vec<Vec<usize>> {
            elems.iter().map(|a| elems.iter().map(|b| index[&f(a, b)]).collect()).collect()
        };
        Tables { add: table(&|a, b| ring.add(a, b)), mul: table(&|a, b| ring.mul(a, b)) }
    }

    /// Two-sided ideal generated by `ideal ∪ {x}`, with `ideal` already closed.
    fn extend(&self, ideal: &[bool], x: usize) -> Vec<bool> {
        let n = ideal.len();
        let mut out = ideal.to_vec();
        let mut members: Vec<usize> = (0..n).filter(|&i| out[i]).collect();
        let mut todo = vec![x];
        while let Some(a) = todo.pop() {
            if out[a] {
                continue;
            }
            out[a] = true;
            for &b in &members {
                todo.push(self.add[a][b]);
            }
            for r in 0..n {
                todo.push(self.mul[r][a]);
                todo.push(self.mul[a][r]);
            }
            members.push(a);
        }
        out
    }
}

/// All two-sided ideals, by breadth-first extension of known ideals by one element.
pub fn two_sided_ideals(ring: &RingDescriptor) -> Vec<Vec<bool>> {
    let t = Tables::new(ring);
    let n = t.add.len();
    let zero_idx = ring.elements(1 << 16).unwrap().iter().position(|x| ring.is_zero(x)).unwrap();
    let mut zero = vec![false; n];
    zero[zero_idx] = true;
    let mut seen = BTreeSet::from([zero.clone()]);
    let mut queue = vec![zero];
    while let Some(ideal) = queue.pop() {
        for x in (0..n).filter(|&x| !ideal[x]) {
            let bigger = t.extend(&ideal, x);
            if seen.insert(bigger.clone()) {
                queue.push(bigger);
            }
        }
    }
    seen.into_iter().collect()
}

/// A ring with identity of prime order p is ℤ/p, so `R` maps onto ℤ/2 or ℤ/3 iff some
/// two-sided ideal has index 2 or 3.
pub fn has_small_quotient_by_ideals(ring: &RingDescriptor) -> bool {
    let order = ring.order().unwrap() as usize;
    two_sided_ideals(ring).iter().any(|i| {
        let size = i.iter().filter(|&&b| b).count();
        size * 2 == order || size * 3 == order
    })
}

/// `|GL_n(F_q)| = ∏_{i<n} (q^n - q^i)`.
pub fn gl_order(q: u64, n: u32) -> u64 {
    (0..n).map(|i| q.pow(n) - q.pow(i)).product()
}
