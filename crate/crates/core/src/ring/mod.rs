//! Finite rings: ℤ/n, GF(p^k), finite products, and full matrix rings over those.
//!
//! A [`RingDescriptor`] carries all arithmetic; [`Element`]s are plain canonical
//! values and are only meaningful together with the ring they came from.

mod gf;
pub mod parse;

use std::collections::HashSet;
use std::fmt;

use rand::Rng;

pub use gf::GaloisField;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::numtheory::{
    add_mod, crt, factorize, inverse_mod, is_prime, mul_mod, prime_power, radical, sub_mod,
};

/// Default cap on the number of elements any exhaustive routine will enumerate.
pub const DEFAULT_EXHAUSTION_BOUND: u128 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Zmod(u64),
    GaloisField(GaloisField),
    Product(Vec<RingDescriptor>),
    MatrixRing { base: Box<RingDescriptor>, size: usize },
}

/// Canonical value of a ring element. Equality is representation equality and the
/// derived order is the canonical enumeration order within one ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// Residue in `[0, n)`.
    Residue(u64),
    /// GF(p^k) coefficients, highest degree first.
    Poly(Vec<u64>),
    Tuple(Vec<Element>),
    /// Row-major square array.
    Square(Vec<Element>),
}

impl RingDescriptor {
    pub fn zmod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDescriptor(format!("Z/{n}: modulus must be at least 2")));
        }
        Ok(RingDescriptor::Zmod(n))
    }

    pub fn galois_field(p: u64, k: u32) -> Result<Self> {
        Ok(RingDescriptor::GaloisField(GaloisField::new(p, k)?))
    }

    /// GF(q) for a prime power `q`.
    pub fn galois_field_of_order(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| Error::InvalidDescriptor(format!("GF({q}): {q} is not a prime power")))?;
        Self::galois_field(p, k)
    }

    pub fn product(components: Vec<RingDescriptor>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidDescriptor("empty product".into()));
        }
        if components.iter().any(|c| matches!(c, RingDescriptor::MatrixRing { .. })) {
            return Err(Error::InvalidDescriptor(
                "matrix rings may not appear inside a product".into(),
            ));
        }
        Ok(RingDescriptor::Product(components))
    }

    pub fn matrix_ring(base: RingDescriptor, size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidDescriptor("M(0, _): size must be at least 1".into()));
        }
        if !base.is_commutative() {
            return Err(Error::InvalidDescriptor(format!(
                "M({size}, {base}): base ring must be commutative"
            )));
        }
        Ok(RingDescriptor::MatrixRing { base: Box::new(base), size })
    }

    /// Number of elements, or `None` if it overflows `u128`.
    pub fn order(&self) -> Option<u128> {
        match self {
            RingDescriptor::Zmod(n) => Some(*n as u128),
            RingDescriptor::GaloisField(f) => f.order(),
            RingDescriptor::Product(cs) => {
                cs.iter().try_fold(1u128, |acc, c| acc.checked_mul(c.order()?))
            }
            RingDescriptor::MatrixRing { base, size } => {
                base.order()?.checked_pow(u32::try_from(size * size).ok()?)
            }
        }
    }

    pub fn is_commutative(&self) -> bool {
        match self {
            RingDescriptor::Zmod(_) | RingDescriptor::GaloisField(_) => true,
            RingDescriptor::Product(cs) => cs.iter().all(|c| c.is_commutative()),
            RingDescriptor::MatrixRing { size, .. } => *size == 1,
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            RingDescriptor::Zmod(n) => is_prime(*n),
            RingDescriptor::GaloisField(_) => true,
            _ => false,
        }
    }

    pub(crate) fn check_bound(&self, bound: u128) -> Result<u128> {
        match self.order() {
            Some(q) if q <= bound => Ok(q),
            q => Err(Error::ExhaustionBoundExceeded {
                ring: self.to_string(),
                order: q.map_or_else(|| "more than 2^128".to_string(), |q| q.to_string()),
                bound,
            }),
        }
    }

    pub fn zero(&self) -> Element {
        match self {
            RingDescriptor::Zmod(_) => Element::Residue(0),
            RingDescriptor::GaloisField(f) => Element::Poly(f.zero()),
            RingDescriptor::Product(cs) => Element::Tuple(cs.iter().map(|c| c.zero()).collect()),
            RingDescriptor::MatrixRing { base, size } => {
                Element::Square(vec![base.zero(); size * size])
            }
        }
    }

    pub fn one(&self) -> Element {
        self.from_int(1)
    }

    /// Image of an integer under the unique ring map ℤ → R.
    pub fn from_int(&self, x: i128) -> Element {
        match self {
            RingDescriptor::Zmod(n) => Element::Residue(x.rem_euclid(*n as i128) as u64),
            RingDescriptor::GaloisField(f) => Element::Poly(f.embed_int(x)),
            RingDescriptor::Product(cs) => Element::Tuple(cs.iter().map(|c| c.from_int(x)).collect()),
            RingDescriptor::MatrixRing { base, size } => {
                let mut v = vec![base.zero(); size * size];
                for i in 0..*size {
                    v[i * size + i] = base.from_int(x);
                }
                Element::Square(v)
            }
        }
    }

    pub fn contains(&self, x: &Element) -> bool {
        match (self, x) {
            (RingDescriptor::Zmod(n), Element::Residue(r)) => r < n,
            (RingDescriptor::GaloisField(f), Element::Poly(c)) => f.contains(c),
            (RingDescriptor::Product(cs), Element::Tuple(xs)) => {
                cs.len() == xs.len() && cs.iter().zip(xs).all(|(c, x)| c.contains(x))
            }
            (RingDescriptor::MatrixRing { base, size }, Element::Square(xs)) => {
                xs.len() == size * size && xs.iter().all(|x| base.contains(x))
            }
            _ => false,
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        match (self, a, b) {
            (RingDescriptor::Zmod(n), Element::Residue(x), Element::Residue(y)) => {
                Element::Residue(add_mod(*x, *y, *n))
            }
            (RingDescriptor::GaloisField(f), Element::Poly(x), Element::Poly(y)) => {
                Element::Poly(f.add(x, y))
            }
            (RingDescriptor::Product(cs), Element::Tuple(xs), Element::Tuple(ys)) => Element::Tuple(
                cs.iter().zip(xs).zip(ys).map(|((c, x), y)| c.add(x, y)).collect(),
            ),
            (RingDescriptor::MatrixRing { base, .. }, Element::Square(xs), Element::Square(ys)) => {
                Element::Square(xs.iter().zip(ys).map(|(x, y)| base.add(x, y)).collect())
            }
            _ => panic!("element does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Element) -> Element {
        match (self, a) {
            (RingDescriptor::Zmod(n), Element::Residue(x)) => Element::Residue(sub_mod(0, *x, *n)),
            (RingDescriptor::GaloisField(f), Element::Poly(x)) => Element::Poly(f.neg(x)),
            (RingDescriptor::Product(cs), Element::Tuple(xs)) => {
                Element::Tuple(cs.iter().zip(xs).map(|(c, x)| c.neg(x)).collect())
            }
            (RingDescriptor::MatrixRing { base, .. }, Element::Square(xs)) => {
                Element::Square(xs.iter().map(|x| base.neg(x)).collect())
            }
            _ => panic!("element does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        match (self, a, b) {
            (RingDescriptor::Zmod(n), Element::Residue(x), Element::Residue(y)) => {
                Element::Residue(mul_mod(*x, *y, *n))
            }
            (RingDescriptor::GaloisField(f), Element::Poly(x), Element::Poly(y)) => {
                Element::Poly(f.mul(x, y))
            }
            (RingDescriptor::Product(cs), Element::Tuple(xs), Element::Tuple(ys)) => Element::Tuple(
                cs.iter().zip(xs).zip(ys).map(|((c, x), y)| c.mul(x, y)).collect(),
            ),
            (RingDescriptor::MatrixRing { base, size }, Element::Square(xs), Element::Square(ys)) => {
                let n = *size;
                let mut out = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        let mut acc = base.zero();
                        for t in 0..n {
                            acc = base.add(&acc, &base.mul(&xs[i * n + t], &ys[t * n + j]));
                        }
                        out.push(acc);
                    }
                }
                Element::Square(out)
            }
            _ => panic!("element does not belong to {self}"),
        }
    }

    pub fn is_zero(&self, a: &Element) -> bool {
        *a == self.zero()
    }

    /// Returns the two-sided inverse of `x` if it is a unit.
    pub fn is_unit(&self, x: &Element) -> Option<Element> {
        match (self, x) {
            (RingDescriptor::Zmod(n), Element::Residue(r)) => {
                inverse_mod(*r, *n).map(Element::Residue)
            }
            (RingDescriptor::GaloisField(f), Element::Poly(c)) => f.inverse(c).map(Element::Poly),
            (RingDescriptor::Product(cs), Element::Tuple(xs)) => cs
                .iter()
                .zip(xs)
                .map(|(c, x)| c.is_unit(x))
                .collect::<Option<Vec<_>>>()
                .map(Element::Tuple),
            (RingDescriptor::MatrixRing { base, size }, Element::Square(xs)) => {
                let m = Matrix::new((**base).clone(), *size, *size, xs.clone()).ok()?;
                let inv = m.inverse().ok()??;
                let y = Element::Square(inv.entries().to_vec());
                let one = self.one();
                (self.mul(x, &y) == one && self.mul(&y, x) == one).then_some(y)
            }
            _ => None,
        }
    }

    /// Every element exactly once, in canonical lexicographic order.
    pub fn elements(&self, bound: u128) -> Result<Vec<Element>> {
        self.check_bound(bound)?;
        Ok(self.enumerate())
    }

    fn enumerate(&self) -> Vec<Element> {
        match self {
            RingDescriptor::Zmod(n) => (0..*n).map(Element::Residue).collect(),
            RingDescriptor::GaloisField(f) => {
                let digits = vec![(0..f.characteristic()).collect::<Vec<_>>(); f.degree() as usize];
                cartesian(&digits).into_iter().map(Element::Poly).collect()
            }
            RingDescriptor::Product(cs) => {
                let lists: Vec<Vec<Element>> = cs.iter().map(|c| c.enumerate()).collect();
                cartesian(&lists).into_iter().map(Element::Tuple).collect()
            }
            RingDescriptor::MatrixRing { base, size } => {
                let lists = vec![base.enumerate(); size * size];
                cartesian(&lists).into_iter().map(Element::Square).collect()
            }
        }
    }

    pub fn units(&self, bound: u128) -> Result<Vec<Element>> {
        Ok(self.elements(bound)?.into_iter().filter(|x| self.is_unit(x).is_some()).collect())
    }

    pub fn idempotents(&self, bound: u128) -> Result<Vec<Element>> {
        Ok(self
            .elements(bound)?
            .into_iter()
            .filter(|e| self.mul(e, e) == *e)
            .collect())
    }

    /// J(R). Uses the structure of ℤ/n and of fields where possible, otherwise
    /// [`Self::jacobson_radical_generic`].
    pub fn jacobson_radical(&self, bound: u128) -> Result<Vec<Element>> {
        match self {
            RingDescriptor::Zmod(n) => {
                let r = radical(*n);
                if (n / r) as u128 > bound {
                    return Err(Error::ExhaustionBoundExceeded {
                        ring: self.to_string(),
                        order: n.to_string(),
                        bound,
                    });
                }
                Ok((0..n / r).map(|i| Element::Residue(i * r)).collect())
            }
            RingDescriptor::GaloisField(_) => Ok(vec![self.zero()]),
            _ => self.jacobson_radical_generic(bound),
        }
    }

    /// `{ x : 1 - r·x is a unit for every r }`, valid in any finite ring.
    pub fn jacobson_radical_generic(&self, bound: u128) -> Result<Vec<Element>> {
        let elements = self.elements(bound)?;
        let units: HashSet<Element> = elements
            .iter()
            .filter(|x| self.is_unit(x).is_some())
            .cloned()
            .collect();
        let one = self.one();
        Ok(elements
            .iter()
            .filter(|x| {
                elements
                    .iter()
                    .all(|r| units.contains(&self.sub(&one, &self.mul(r, x))))
            })
            .cloned()
            .collect())
    }

    /// Writes `a = e·u` with `e` idempotent and `u` a unit: the first idempotent in
    /// canonical order admitting a unit, paired with the first such unit.
    pub fn unit_regular_decompose(&self, a: &Element, bound: u128) -> Result<(Element, Element)> {
        if !self.is_commutative() {
            return Err(Error::UnsupportedRing {
                ring: self.to_string(),
                reason: "unit-regular factorization requires a commutative ring".into(),
            });
        }
        if self.is_field() {
            return Ok(if self.is_zero(a) {
                (self.zero(), self.one())
            } else {
                (self.one(), a.clone())
            });
        }
        let elements = self.elements(bound)?;
        let units: Vec<&Element> = elements.iter().filter(|x| self.is_unit(x).is_some()).collect();
        for e in elements.iter().filter(|e| self.mul(e, e) == **e) {
            if let Some(u) = units.iter().find(|u| self.mul(e, u) == *a) {
                return Ok((e.clone(), (*u).clone()));
            }
        }
        Err(Error::NotUnitRegular {
            ring: self.to_string(),
            element: self.format_element(a),
        })
    }

    /// Whether some factor ring of R is isomorphic to ℤ/2 or ℤ/3.
    pub fn has_factor_z2_or_z3(&self) -> bool {
        match self {
            RingDescriptor::Zmod(n) => n % 2 == 0 || n % 3 == 0,
            RingDescriptor::GaloisField(f) => {
                f.degree() == 1 && (f.characteristic() == 2 || f.characteristic() == 3)
            }
            RingDescriptor::Product(cs) => cs.iter().any(|c| c.has_factor_z2_or_z3()),
            // factor rings of M_m(S) are M_m(S/I); for m >= 2 they have at least 16 elements
            RingDescriptor::MatrixRing { base, size } => *size == 1 && base.has_factor_z2_or_z3(),
        }
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Element {
        match self {
            RingDescriptor::Zmod(n) => Element::Residue(rng.random_range(0..*n)),
            RingDescriptor::GaloisField(f) => Element::Poly(
                (0..f.degree()).map(|_| rng.random_range(0..f.characteristic())).collect(),
            ),
            RingDescriptor::Product(cs) => {
                Element::Tuple(cs.iter().map(|c| c.random_element(rng)).collect())
            }
            RingDescriptor::MatrixRing { base, size } => {
                Element::Square((0..size * size).map(|_| base.random_element(rng)).collect())
            }
        }
    }

    /// Decomposition of a commutative ring into local rings (ℤ/p^e or a Galois field),
    /// via CRT for ℤ/n and flattening for products.
    pub fn local_factors(&self) -> Vec<RingDescriptor> {
        match self {
            RingDescriptor::Zmod(n) => factorize(*n)
                .into_iter()
                .map(|(p, e)| RingDescriptor::Zmod(p.pow(e)))
                .collect(),
            RingDescriptor::GaloisField(_) => vec![self.clone()],
            RingDescriptor::Product(cs) => cs.iter().flat_map(|c| c.local_factors()).collect(),
            RingDescriptor::MatrixRing { .. } => panic!("local_factors on a noncommutative ring"),
        }
    }

    /// Image of `x` in each of [`Self::local_factors`].
    pub fn split_local(&self, x: &Element) -> Vec<Element> {
        let mut out = Vec::new();
        self.split_into(x, &mut out);
        out
    }

    fn split_into(&self, x: &Element, out: &mut Vec<Element>) {
        match (self, x) {
            (RingDescriptor::Zmod(n), Element::Residue(r)) => {
                out.extend(factorize(*n).into_iter().map(|(p, e)| Element::Residue(r % p.pow(e))))
            }
            (RingDescriptor::GaloisField(_), _) => out.push(x.clone()),
            (RingDescriptor::Product(cs), Element::Tuple(xs)) => {
                for (c, x) in cs.iter().zip(xs) {
                    c.split_into(x, out);
                }
            }
            _ => panic!("element does not belong to {self}"),
        }
    }

    /// Inverse of [`Self::split_local`].
    pub fn join_local(&self, parts: &[Element]) -> Element {
        let mut it = parts.iter();
        let x = self.join_from(&mut it);
        debug_assert!(it.next().is_none());
        x
    }

    fn join_from<'a>(&self, it: &mut impl Iterator<Item = &'a Element>) -> Element {
        match self {
            RingDescriptor::Zmod(n) => {
                let moduli: Vec<u64> = factorize(*n).into_iter().map(|(p, e)| p.pow(e)).collect();
                let residues: Vec<u64> = moduli
                    .iter()
                    .map(|_| match it.next() {
                        Some(Element::Residue(r)) => *r,
                        other => panic!("expected a residue, found {other:?}"),
                    })
                    .collect();
                Element::Residue(crt(&residues, &moduli))
            }
            RingDescriptor::GaloisField(_) => it.next().expect("missing component").clone(),
            RingDescriptor::Product(cs) => Element::Tuple(cs.iter().map(|c| c.join_from(it)).collect()),
            RingDescriptor::MatrixRing { .. } => panic!("join_local on a noncommutative ring"),
        }
    }

    /// Renders an element in the literal syntax accepted by [`Self::parse_element`].
    pub fn format_element(&self, x: &Element) -> String {
        match (self, x) {
            (RingDescriptor::Zmod(_), Element::Residue(r)) => r.to_string(),
            (RingDescriptor::GaloisField(f), Element::Poly(c)) if f.degree() == 1 => c[0].to_string(),
            (RingDescriptor::GaloisField(_), Element::Poly(c)) => {
                let parts: Vec<String> = c.iter().map(|d| d.to_string()).collect();
                format!("({})", parts.join(","))
            }
            (RingDescriptor::Product(cs), Element::Tuple(xs)) => {
                let parts: Vec<String> =
                    cs.iter().zip(xs).map(|(c, x)| c.format_element(x)).collect();
                format!("({})", parts.join(", "))
            }
            (RingDescriptor::MatrixRing { base, size }, Element::Square(xs)) => {
                let rows: Vec<String> = xs
                    .chunks(*size)
                    .map(|row| {
                        let cells: Vec<String> = row.iter().map(|x| base.format_element(x)).collect();
                        format!("[{}]", cells.join(", "))
                    })
                    .collect();
                format!("[{}]", rows.join(", "))
            }
            _ => format!("{x:?}"),
        }
    }

    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let lit = parse::parse_literal(text)?;
        self.element_from_literal(&lit)
    }

    pub fn element_from_literal(&self, lit: &parse::Literal) -> Result<Element> {
        use parse::Literal;
        let bad = || Error::NotAnElement { ring: self.to_string(), literal: lit.to_string() };
        match (self, lit) {
            (RingDescriptor::Zmod(_), Literal::Int(v)) => Ok(self.from_int(*v)),
            (RingDescriptor::GaloisField(_), Literal::Int(v)) => Ok(self.from_int(*v)),
            (RingDescriptor::GaloisField(f), Literal::Tuple(items)) => {
                if items.len() != f.degree() as usize {
                    return Err(bad());
                }
                let coeffs = items
                    .iter()
                    .map(|it| match it {
                        Literal::Int(v) => Ok(v.rem_euclid(f.characteristic() as i128) as u64),
                        _ => Err(bad()),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Element::Poly(coeffs))
            }
            (RingDescriptor::Product(cs), Literal::Tuple(items)) if items.len() == cs.len() => cs
                .iter()
                .zip(items)
                .map(|(c, it)| c.element_from_literal(it))
                .collect::<Result<Vec<_>>>()
                .map(Element::Tuple),
            (RingDescriptor::MatrixRing { base, size }, Literal::List(rows)) => {
                if rows.len() != *size {
                    return Err(bad());
                }
                let mut out = Vec::with_capacity(size * size);
                for row in rows {
                    match row {
                        Literal::List(cells) if cells.len() == *size => {
                            for c in cells {
                                out.push(base.element_from_literal(c)?);
                            }
                        }
                        _ => return Err(bad()),
                    }
                }
                Ok(Element::Square(out))
            }
            _ => Err(bad()),
        }
    }
}

/// All tuples drawn from `lists`, the last position varying fastest.
fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::with_capacity(lists.len())];
    for list in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Zmod(n) => write!(f, "Z/{n}"),
            RingDescriptor::GaloisField(g) => match g.order() {
                Some(q) => write!(f, "GF({q})"),
                None => write!(f, "GF({},{})", g.characteristic(), g.degree()),
            },
            RingDescriptor::Product(cs) => {
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    match c {
                        RingDescriptor::Product(_) => write!(f, "({c})")?,
                        _ => write!(f, "{c}")?,
                    }
                }
                Ok(())
            }
            RingDescriptor::MatrixRing { base, size } => write!(f, "M({size}, {base})"),
        }
    }
}

impl std::str::FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::parse_descriptor(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> RingDescriptor {
        RingDescriptor::zmod(n).unwrap()
    }

    fn r(v: u64) -> Element {
        Element::Residue(v)
    }

    #[test]
    fn element_counts() {
        assert_eq!(z(4).elements(DEFAULT_EXHAUSTION_BOUND).unwrap(), vec![r(0), r(1), r(2), r(3)]);
        let gf4 = RingDescriptor::galois_field(2, 2).unwrap();
        assert_eq!(gf4.elements(DEFAULT_EXHAUSTION_BOUND).unwrap().len(), 4);
        let prod = RingDescriptor::product(vec![z(2), z(3)]).unwrap();
        let elems = prod.elements(DEFAULT_EXHAUSTION_BOUND).unwrap();
        assert_eq!(elems.len(), 6);
        assert!(elems.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn enumeration_respects_bound() {
        let big = RingDescriptor::matrix_ring(z(4), 3).unwrap();
        assert!(matches!(
            big.elements(DEFAULT_EXHAUSTION_BOUND),
            Err(Error::ExhaustionBoundExceeded { .. })
        ));
        assert!(z(5).elements(4).is_err());
    }

    #[test]
    fn unit_examples() {
        assert_eq!(z(6).is_unit(&r(5)), Some(r(5)));
        assert_eq!(z(6).is_unit(&r(2)), None);
        let gf4 = RingDescriptor::galois_field(2, 2).unwrap();
        for x in gf4.elements(16).unwrap() {
            assert_eq!(gf4.is_unit(&x).is_some(), !gf4.is_zero(&x));
        }
    }

    #[test]
    fn radical_examples() {
        assert_eq!(z(4).jacobson_radical(16).unwrap(), vec![r(0), r(2)]);
        assert_eq!(z(6).jacobson_radical(16).unwrap(), vec![r(0)]);
        let m2 = RingDescriptor::matrix_ring(z(2), 2).unwrap();
        assert_eq!(m2.jacobson_radical(16).unwrap(), vec![m2.zero()]);
    }

    #[test]
    fn unit_regular_examples() {
        assert_eq!(z(5).unit_regular_decompose(&r(0), 64).unwrap(), (r(0), r(1)));
        assert_eq!(z(5).unit_regular_decompose(&r(2), 64).unwrap(), (r(1), r(2)));
        assert_eq!(z(6).unit_regular_decompose(&r(3), 64).unwrap(), (r(3), r(1)));
        assert!(matches!(
            z(4).unit_regular_decompose(&r(2), 64),
            Err(Error::NotUnitRegular { .. })
        ));
    }

    #[test]
    fn factor_examples() {
        assert!(z(12).has_factor_z2_or_z3());
        assert!(!RingDescriptor::galois_field(2, 2).unwrap().has_factor_z2_or_z3());
        assert!(!RingDescriptor::matrix_ring(z(2), 2).unwrap().has_factor_z2_or_z3());
        assert!(RingDescriptor::matrix_ring(z(3), 1).unwrap().has_factor_z2_or_z3());
        assert!(!z(35).has_factor_z2_or_z3());
    }

    #[test]
    fn local_split_roundtrip() {
        let ring = RingDescriptor::product(vec![z(12), RingDescriptor::galois_field(2, 2).unwrap()])
            .unwrap();
        assert_eq!(ring.local_factors(), vec![z(4), z(3), RingDescriptor::galois_field(2, 2).unwrap()]);
        for x in ring.elements(1 << 10).unwrap() {
            assert_eq!(ring.join_local(&ring.split_local(&x)), x);
        }
    }

    #[test]
    fn descriptor_constructors_validate() {
        assert!(RingDescriptor::zmod(1).is_err());
        assert!(RingDescriptor::product(vec![]).is_err());
        assert!(RingDescriptor::matrix_ring(z(2), 0).is_err());
        let m = RingDescriptor::matrix_ring(z(2), 2).unwrap();
        assert!(RingDescriptor::matrix_ring(m.clone(), 2).is_err());
        assert!(RingDescriptor::product(vec![m]).is_err());
    }
}
