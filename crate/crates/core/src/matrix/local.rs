//! Elimination over a local factor: ℤ/p^e or a Galois field.
//!
//! In a local ring every element is `p^v · w` with `w` a unit, and `a` divides `b`
//! whenever `v(a) <= v(b)`, so pivoting on a minimal-valuation entry always clears
//! its row and column.

use super::Matrix;
use crate::numtheory::{factorize, inverse_mod, mul_mod, valuation};
use crate::ring::{Element, RingDescriptor};

pub(crate) enum LocalRing<'a> {
    PrimePower { ring: &'a RingDescriptor, p: u64, e: u32, modulus: u64 },
    Field { ring: &'a RingDescriptor },
}

impl<'a> LocalRing<'a> {
    pub(crate) fn of(ring: &'a RingDescriptor) -> LocalRing<'a> {
        match ring {
            RingDescriptor::Zmod(n) => match factorize(*n).as_slice() {
                [(p, e)] => LocalRing::PrimePower { ring, p: *p, e: *e, modulus: *n },
                _ => panic!("{ring} is not local"),
            },
            RingDescriptor::GaloisField(_) => LocalRing::Field { ring },
            _ => panic!("{ring} is not local"),
        }
    }

    fn ring(&self) -> &RingDescriptor {
        match self {
            LocalRing::PrimePower { ring, .. } | LocalRing::Field { ring } => ring,
        }
    }

    /// Valuation of zero.
    fn top(&self) -> u32 {
        match self {
            LocalRing::PrimePower { e, .. } => *e,
            LocalRing::Field { .. } => 1,
        }
    }

    pub(crate) fn valuation(&self, x: &Element) -> u32 {
        match (self, x) {
            (LocalRing::PrimePower { p, e, .. }, Element::Residue(r)) => valuation(*r, *p, *e),
            (LocalRing::Field { ring }, x) => u32::from(ring.is_zero(x)),
            _ => unreachable!(),
        }
    }

    /// The normalized representative `p^v` (or 0 when `v` is the top valuation).
    pub(crate) fn valuation_representative(&self, v: u32) -> Element {
        match self {
            _ if v >= self.top() => self.ring().zero(),
            LocalRing::PrimePower { p, .. } => Element::Residue(p.pow(v)),
            LocalRing::Field { ring } => ring.one(),
        }
    }

    /// The unit `w` with `x = p^v(x) · w`; `x` must be nonzero.
    pub(crate) fn unit_part(&self, x: &Element) -> Element {
        match (self, x) {
            (LocalRing::PrimePower { p, .. }, Element::Residue(r)) => {
                Element::Residue(r / p.pow(self.valuation(x)))
            }
            (LocalRing::Field { .. }, x) => x.clone(),
            _ => unreachable!(),
        }
    }

    /// Some `c` with `b · c = a`, assuming `v(b) <= v(a)`.
    pub(crate) fn divide(&self, a: &Element, b: &Element) -> Element {
        let ring = self.ring();
        if ring.is_zero(a) {
            return ring.zero();
        }
        match (self, a, b) {
            (LocalRing::PrimePower { p, modulus, .. }, Element::Residue(x), Element::Residue(y)) => {
                let shift = p.pow(self.valuation(b));
                debug_assert_eq!(x % shift, 0);
                let w = inverse_mod(y / shift, *modulus).expect("unit part is a unit");
                Element::Residue(mul_mod(x / shift, w, *modulus))
            }
            (LocalRing::Field { ring }, a, b) => {
                ring.mul(a, &ring.is_unit(b).expect("nonzero field element is a unit"))
            }
            _ => unreachable!(),
        }
    }

    pub(crate) fn inverse_of_unit(&self, x: &Element) -> Element {
        self.ring().is_unit(x).expect("pivot is a unit")
    }

    /// Determinant by column-pivoted elimination.
    pub(crate) fn det(&self, m: &Matrix) -> Element {
        let ring = self.ring();
        let n = m.rows;
        let mut a = m.data.clone();
        let mut det = ring.one();
        for t in 0..n {
            let Some(pivot_row) = (t..n)
                .filter(|&i| !ring.is_zero(&a[i * n + t]))
                .min_by_key(|&i| self.valuation(&a[i * n + t]))
            else {
                return ring.zero();
            };
            if pivot_row != t {
                for j in 0..n {
                    a.swap(t * n + j, pivot_row * n + j);
                }
                det = ring.neg(&det);
            }
            let pivot = a[t * n + t].clone();
            for i in t + 1..n {
                let c = self.divide(&a[i * n + t], &pivot);
                if ring.is_zero(&c) {
                    continue;
                }
                for j in t..n {
                    let delta = ring.mul(&c, &a[t * n + j]);
                    a[i * n + j] = ring.sub(&a[i * n + j], &delta);
                }
            }
            det = ring.mul(&det, &pivot);
        }
        det
    }

    /// Gauss–Jordan with unit pivots; `None` if some column has no unit pivot.
    pub(crate) fn inverse(&self, m: &Matrix) -> Option<Matrix> {
        let ring = self.ring();
        let n = m.rows;
        let mut a = m.data.clone();
        let mut inv = Matrix::identity(ring, n).data;
        for t in 0..n {
            let pivot_row = (t..n).find(|&i| self.valuation(&a[i * n + t]) == 0)?;
            if pivot_row != t {
                for j in 0..n {
                    a.swap(t * n + j, pivot_row * n + j);
                    inv.swap(t * n + j, pivot_row * n + j);
                }
            }
            let w = self.inverse_of_unit(&a[t * n + t]);
            for j in 0..n {
                a[t * n + j] = ring.mul(&w, &a[t * n + j]);
                inv[t * n + j] = ring.mul(&w, &inv[t * n + j]);
            }
            for i in (0..n).filter(|&i| i != t) {
                let c = a[i * n + t].clone();
                if ring.is_zero(&c) {
                    continue;
                }
                for j in 0..n {
                    let da = ring.mul(&c, &a[t * n + j]);
                    a[i * n + j] = ring.sub(&a[i * n + j], &da);
                    let di = ring.mul(&c, &inv[t * n + j]);
                    inv[i * n + j] = ring.sub(&inv[i * n + j], &di);
                }
            }
        }
        Some(Matrix { ring: ring.clone(), rows: n, cols: n, data: inv })
    }
}
