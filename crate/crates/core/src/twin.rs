//! Twin decompositions: for a square matrix `M`, a unit `U` with `M + U` and `M - U`
//! both invertible, packaged with all three inverses as a [`TwinCertificate`].
//!
//! Construction by size over a field: a search over the field for `1x1`, the
//! idempotent construction for `2x2`, and the shifted-cycle unit on a diagonal
//! reduction for `n >= 3`. ℤ/n splits by CRT, products split componentwise, and
//! residue rings with square factors are solved modulo their radical and lifted.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::{diagonal_reduction, Matrix};
use crate::numtheory::{factorize, radical};
use crate::ring::{Element, RingDescriptor, DEFAULT_EXHAUSTION_BOUND};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Shifted-cycle unit on a diagonal reduction, `n >= 3`.
    Edr,
    /// Idempotent construction on a `2x2` diagonal reduction.
    Abelian2x2,
    /// Field element search, `1x1`.
    Element,
    /// Solved modulo the Jacobson radical and lifted.
    Lifted,
    /// Assembled from independent components (CRT or direct product).
    Product,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Edr => "edr",
            Method::Abelian2x2 => "abelian2x2",
            Method::Element => "element",
            Method::Lifted => "lifted",
            Method::Product => "product",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edr" => Ok(Method::Edr),
            "abelian2x2" => Ok(Method::Abelian2x2),
            "element" => Ok(Method::Element),
            "lifted" => Ok(Method::Lifted),
            "product" => Ok(Method::Product),
            other => Err(Error::Parse(format!("unknown method {other:?}"))),
        }
    }
}

/// `unit` together with the inverses of `unit`, `matrix + unit` and `matrix - unit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinCertificate {
    pub matrix: Matrix,
    pub unit: Matrix,
    pub unit_inv: Matrix,
    pub plus_inv: Matrix,
    pub minus_inv: Matrix,
    pub method: Method,
}

impl TwinCertificate {
    /// Checks all six one-sided products against the identity, recomputing `M ± U`.
    pub fn verify(&self) -> bool {
        let check = || -> Result<bool> {
            let n = self.matrix.rows();
            if !self.matrix.is_square() {
                return Ok(false);
            }
            let plus = self.matrix.checked_add(&self.unit)?;
            let minus = self.matrix.checked_sub(&self.unit)?;
            let pairs = [
                (&self.unit, &self.unit_inv),
                (&plus, &self.plus_inv),
                (&minus, &self.minus_inv),
            ];
            for (a, b) in pairs {
                if a.rows() != n || b.rows() != n {
                    return Ok(false);
                }
                if !a.checked_mul(b)?.is_identity() || !b.checked_mul(a)?.is_identity() {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        check().unwrap_or(false)
    }

    pub fn plus(&self) -> Matrix {
        self.matrix.checked_add(&self.unit).expect("certificate shapes agree")
    }

    pub fn minus(&self) -> Matrix {
        self.matrix.checked_sub(&self.unit).expect("certificate shapes agree")
    }

    /// `M = (M + U) + (-U)`, both summands units.
    pub fn two_sum(&self) -> TwoSumDecomposition {
        TwoSumDecomposition {
            first: self.plus(),
            second: self.unit.neg(),
            first_inv: self.plus_inv.clone(),
            second_inv: self.unit_inv.neg(),
            from_twin: true,
        }
    }
}

/// `M = first + second` with both summands invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSumDecomposition {
    pub first: Matrix,
    pub second: Matrix,
    pub first_inv: Matrix,
    pub second_inv: Matrix,
    /// False when found by the exhaustive fallback rather than a twin certificate.
    pub from_twin: bool,
}

impl TwoSumDecomposition {
    pub fn verify(&self, m: &Matrix) -> bool {
        let check = || -> Result<bool> {
            Ok(self.first.checked_add(&self.second)? == *m
                && self.first.checked_mul(&self.first_inv)?.is_identity()
                && self.first_inv.checked_mul(&self.first)?.is_identity()
                && self.second.checked_mul(&self.second_inv)?.is_identity()
                && self.second_inv.checked_mul(&self.second)?.is_identity())
        };
        check().unwrap_or(false)
    }
}

fn invert_or_bug(m: &Matrix, what: &str) -> Result<Matrix> {
    m.inverse()?.ok_or_else(|| {
        Error::ConstructionVerificationFailed(format!("{what} is singular: {}", m.format_rows()))
    })
}

fn seal(cert: TwinCertificate) -> Result<TwinCertificate> {
    if cert.verify() {
        Ok(cert)
    } else {
        Err(Error::ConstructionVerificationFailed(format!(
            "{} certificate for {} over {}",
            cert.method,
            cert.matrix.format_rows(),
            cert.matrix.ring()
        )))
    }
}

/// Certificate for `matrix` and `unit`, with `M ± U` inverted by elimination.
fn certify(matrix: &Matrix, unit: Matrix, unit_inv: Matrix, method: Method) -> Result<TwinCertificate> {
    let plus_inv = invert_or_bug(&matrix.checked_add(&unit)?, "M + U")?;
    let minus_inv = invert_or_bug(&matrix.checked_sub(&unit)?, "M - U")?;
    seal(TwinCertificate { matrix: matrix.clone(), unit, unit_inv, plus_inv, minus_inv, method })
}

/// The unit for `D = diag(d)`, `n >= 3`: ones at `(1,n)` and on the subdiagonal, and
/// `d_n·d_1` at `(n,1)` (1-based). It is the block matrix `[[0, 1], [T, 0]]` with
/// `T = I + (0,..,0,d_n)^T (d_1,0,..,0)`.
pub fn edr_unit(d: &[Element], ring: &RingDescriptor) -> Matrix {
    let n = d.len();
    assert!(n >= 3, "the shifted-cycle unit needs n >= 3");
    let mut u = Matrix::zero(ring, n, n);
    u.set(0, n - 1, ring.one());
    for i in 0..n - 1 {
        u.set(i + 1, i, ring.one());
    }
    u.set(n - 1, 0, ring.mul(&d[n - 1], &d[0]));
    u
}

/// Closed-form inverse of [`edr_unit`]: ones at `(i,i+1)` and `(n,1)`, and
/// `-d_n·d_1` at `(n-1,2)` (1-based).
pub fn edr_unit_inverse(d: &[Element], ring: &RingDescriptor) -> Matrix {
    let n = d.len();
    assert!(n >= 3, "the shifted-cycle unit needs n >= 3");
    let mut a = Matrix::zero(ring, n, n);
    for i in 0..n - 1 {
        a.set(i, i + 1, ring.one());
    }
    a.set(n - 2, 1, ring.neg(&ring.mul(&d[n - 1], &d[0])));
    a.set(n - 1, 0, ring.one());
    a
}

/// Twin certificate for `diag(d)` via [`edr_unit`].
pub fn edr_twin_unit(d: &[Element], ring: &RingDescriptor) -> Result<TwinCertificate> {
    if d.len() < 3 {
        return Err(Error::ShapeMismatch(format!(
            "shifted-cycle construction needs at least 3 diagonal entries, got {}",
            d.len()
        )));
    }
    if !ring.is_commutative() {
        return Err(Error::UnsupportedRing {
            ring: ring.to_string(),
            reason: "construction requires a commutative ring".into(),
        });
    }
    let diag = Matrix::diagonal(ring, d);
    certify(&diag, edr_unit(d, ring), edr_unit_inverse(d, ring), Method::Edr)
}

fn square2(ring: &RingDescriptor, entries: [Element; 4]) -> Matrix {
    Matrix::new(ring.clone(), 2, 2, entries.to_vec()).expect("2x2 entries belong to the ring")
}

/// `V = [[0, -1], [-1, -e2]]`.
pub fn idempotent_twin_v(ring: &RingDescriptor, e2: &Element) -> Matrix {
    let m1 = ring.from_int(-1);
    square2(ring, [ring.zero(), m1.clone(), m1, ring.neg(e2)])
}

/// `V^-1 = [[e2, -1], [-1, 0]]`.
pub fn idempotent_twin_v_inverse(ring: &RingDescriptor, e2: &Element) -> Matrix {
    let m1 = ring.from_int(-1);
    square2(ring, [e2.clone(), m1.clone(), m1, ring.zero()])
}

/// `(E - V)^-1 = [[4e1e2 - 2e2, 1 - 2e1e2], [1 - 2e1e2, 2e1e2 - e1]]` for `E = diag(e1, e2)`.
pub fn idempotent_e_minus_v_inverse(ring: &RingDescriptor, e1: &Element, e2: &Element) -> Matrix {
    let e1e2 = ring.mul(e1, e2);
    let two = ring.from_int(2);
    let four = ring.from_int(4);
    let off = ring.sub(&ring.one(), &ring.mul(&two, &e1e2));
    square2(
        ring,
        [
            ring.sub(&ring.mul(&four, &e1e2), &ring.mul(&two, e2)),
            off.clone(),
            off,
            ring.sub(&ring.mul(&two, &e1e2), e1),
        ],
    )
}

/// `(E + V)^-1 = [[0, -1], [-1, -e1]]`.
pub fn idempotent_e_plus_v_inverse(ring: &RingDescriptor, e1: &Element) -> Matrix {
    let m1 = ring.from_int(-1);
    square2(ring, [ring.zero(), m1.clone(), m1, ring.neg(e1)])
}

/// Twin certificate for a `2x2` matrix over a commutative ring in which the
/// diagonal entries of its reduction factor as idempotent times unit.
///
/// With `PAQ = diag(a, b) = diag(u, v)·diag(e1, e2)`, the unit is
/// `P^-1 · diag(u, v) · V · Q^-1`.
pub fn abelian_twin_unit_2x2(a: &Matrix) -> Result<TwinCertificate> {
    if (a.rows(), a.cols()) != (2, 2) {
        return Err(Error::ShapeMismatch(format!("expected a 2x2 matrix, got {}x{}", a.rows(), a.cols())));
    }
    let ring = a.ring();
    let red = diagonal_reduction(a)?;
    let diag = red.d.diagonal_entries();
    let (e1, u) = ring.unit_regular_decompose(&diag[0], DEFAULT_EXHAUSTION_BOUND)?;
    let (e2, v) = ring.unit_regular_decompose(&diag[1], DEFAULT_EXHAUSTION_BOUND)?;

    let units = Matrix::diagonal(ring, &[u.clone(), v.clone()]);
    let units_inv = Matrix::diagonal(
        ring,
        &[ring.is_unit(&u).expect("unit"), ring.is_unit(&v).expect("unit")],
    );
    let idem = Matrix::diagonal(ring, &[e1.clone(), e2.clone()]);
    let twin_v = idempotent_twin_v(ring, &e2);
    let v_inv = idempotent_twin_v_inverse(ring, &e2);
    let minus_inv = idempotent_e_minus_v_inverse(ring, &e1, &e2);
    let plus_inv = idempotent_e_plus_v_inverse(ring, &e1);

    let is_inverse = |x: &Matrix, y: &Matrix| -> Result<bool> {
        Ok(x.checked_mul(y)?.is_identity() && y.checked_mul(x)?.is_identity())
    };
    if !is_inverse(&twin_v, &v_inv)?
        || !is_inverse(&idem.checked_sub(&twin_v)?, &minus_inv)?
        || !is_inverse(&idem.checked_add(&twin_v)?, &plus_inv)?
    {
        return Err(Error::ConstructionVerificationFailed(format!(
            "idempotent formulas with e1={}, e2={} over {ring}",
            ring.format_element(&e1),
            ring.format_element(&e2)
        )));
    }

    let p_inv = invert_or_bug(&red.p, "P")?;
    let q_inv = invert_or_bug(&red.q, "Q")?;
    // conjugate back: X' = P^-1 X Q^-1, X'^-1 = Q X^-1 P
    let back = |x: &Matrix| p_inv.checked_mul(x)?.checked_mul(&q_inv);
    let back_inv = |x: &Matrix| red.q.checked_mul(x)?.checked_mul(&red.p);

    let unit = back(&units.checked_mul(&twin_v)?)?;
    seal(TwinCertificate {
        matrix: a.clone(),
        unit,
        unit_inv: back_inv(&v_inv.checked_mul(&units_inv)?)?,
        plus_inv: back_inv(&plus_inv.checked_mul(&units_inv)?)?,
        minus_inv: back_inv(&minus_inv.checked_mul(&units_inv)?)?,
        method: Method::Abelian2x2,
    })
}

/// Canonical-order element `idx` of ℤ/p or GF(p^k).
fn field_element_at(field: &RingDescriptor, idx: u128) -> Element {
    match field {
        RingDescriptor::Zmod(_) => Element::Residue(idx as u64),
        RingDescriptor::GaloisField(f) => {
            let p = f.characteristic() as u128;
            let k = f.degree();
            Element::Poly((0..k).rev().map(|i| ((idx / p.pow(i)) % p) as u64).collect())
        }
        _ => unreachable!("not a field"),
    }
}

/// First unit `u` in canonical order with `x + u` and `x - u` both nonzero.
pub fn division_twin_unit(field: &RingDescriptor, x: &Element) -> Result<(Element, TwinCertificate)> {
    if !field.is_field() {
        return Err(Error::UnsupportedRing {
            ring: field.to_string(),
            reason: "element search requires a field".into(),
        });
    }
    let order = field.order().unwrap_or(u128::MAX);
    if order < 4 {
        return Err(Error::FieldTooSmall { field: field.to_string(), order: order as u64 });
    }
    // zero, x and -x rule out at most three candidates
    let u = (1..order.min(5))
        .map(|i| field_element_at(field, i))
        .find(|u| !field.is_zero(&field.add(x, u)) && !field.is_zero(&field.sub(x, u)))
        .expect("a field with at least 4 elements has a twin unit for every element");
    let one_by_one = |e: Element| Matrix::new(field.clone(), 1, 1, vec![e]).expect("field element");
    let inv = |e: &Element| field.is_unit(e).expect("nonzero field element");
    let cert = TwinCertificate {
        matrix: one_by_one(x.clone()),
        unit: one_by_one(u.clone()),
        unit_inv: one_by_one(inv(&u)),
        plus_inv: one_by_one(inv(&field.add(x, &u))),
        minus_inv: one_by_one(inv(&field.sub(x, &u))),
        method: Method::Element,
    };
    Ok((u, seal(cert)?))
}

/// Solves the twin problem for `m` over ℤ/n by solving over ℤ/rad(n) with `solve`,
/// lifting each entry of the unit to its smallest preimage, and recomputing the
/// inverses over ℤ/n.
pub fn lift_mod_radical<F>(m: &Matrix, solve: F) -> Result<TwinCertificate>
where
    F: FnOnce(&Matrix) -> Result<TwinCertificate>,
{
    let &RingDescriptor::Zmod(n) = m.ring() else {
        return Err(Error::UnsupportedRing {
            ring: m.ring().to_string(),
            reason: "radical lifting is implemented for Z/n".into(),
        });
    };
    let r = radical(n);
    let quotient = RingDescriptor::Zmod(r);
    let reduce = |x: &Element| match x {
        Element::Residue(v) => Element::Residue(v % r),
        _ => unreachable!(),
    };
    let m_bar = m.map_into(&quotient, reduce)?;
    let cert_bar = solve(&m_bar).map_err(|e| match e {
        Error::NotTwinGood { .. } | Error::FieldTooSmall { .. } => Error::QuotientUnsolvable {
            quotient: quotient.to_string(),
            reason: e.to_string(),
        },
        other => other,
    })?;
    // residues in [0, r) are already the smallest preimages
    let unit = cert_bar.unit.map_into(m.ring(), Element::clone)?;
    let unit_inv = invert_or_bug(&unit, "lifted U")?;
    certify(m, unit, unit_inv, Method::Lifted)
}

/// Residue field order of a local factor.
fn residue_field_order(local: &RingDescriptor) -> (RingDescriptor, u128) {
    match local {
        RingDescriptor::Zmod(q) => {
            let p = factorize(*q)[0].0;
            (RingDescriptor::Zmod(p), p as u128)
        }
        other => (other.clone(), other.order().unwrap_or(u128::MAX)),
    }
}

/// Twin decomposition of a square matrix over ℤ/n, GF(p^k) or a product of those.
///
/// Fails with [`Error::NotTwinGood`] exactly when the matrix is `1x1` and some local
/// factor of the ring has residue field ℤ/2 or ℤ/3.
pub fn twin_decompose(m: &Matrix) -> Result<TwinCertificate> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if m.rows() == 0 {
        return Err(Error::EmptyMatrix("twin decomposition of a 0x0 matrix".into()));
    }
    if m.rows() == 1 {
        for local in m.ring().local_factors() {
            let (field, order) = residue_field_order(&local);
            if order < 4 {
                return Err(Error::NotTwinGood {
                    component: local.to_string(),
                    residue_field: field.to_string(),
                });
            }
        }
    }
    let cert = match m.ring() {
        RingDescriptor::GaloisField(_) => field_twin(m)?,
        RingDescriptor::Zmod(n) => {
            let n = *n;
            let primes: Vec<u64> = factorize(n).iter().map(|&(p, _)| p).collect();
            if radical(n) != n {
                lift_mod_radical(m, twin_decompose).map_err(|e| match e {
                    Error::QuotientUnsolvable { quotient, .. } => Error::NotTwinGood {
                        component: m.ring().to_string(),
                        residue_field: quotient,
                    },
                    other => other,
                })?
            } else if primes.len() == 1 {
                field_twin(m)?
            } else {
                // squarefree: ℤ/n ≅ ∏ ℤ/p, and these are exactly the local factors
                let parts = m
                    .split_local()
                    .iter()
                    .map(field_twin)
                    .collect::<Result<Vec<_>>>()?;
                join_certificates(m, &parts)?
            }
        }
        RingDescriptor::Product(_) => {
            let parts = product_components(m)
                .iter()
                .map(twin_decompose)
                .collect::<Result<Vec<_>>>()?;
            join_product_certificates(m, &parts)?
        }
        RingDescriptor::MatrixRing { .. } => {
            return Err(Error::UnsupportedRing {
                ring: m.ring().to_string(),
                reason: "matrices over matrix rings are not supported".into(),
            })
        }
    };
    Ok(cert)
}

fn field_twin(m: &Matrix) -> Result<TwinCertificate> {
    let ring = m.ring();
    match m.rows() {
        1 => Ok(division_twin_unit(ring, &m[(0, 0)])?.1),
        2 => abelian_twin_unit_2x2(m),
        _ => {
            let red = diagonal_reduction(m)?;
            let d = red.d.diagonal_entries();
            let inner = edr_twin_unit(&d, ring)?;
            let p_inv = invert_or_bug(&red.p, "P")?;
            let q_inv = invert_or_bug(&red.q, "Q")?;
            let back = |x: &Matrix| p_inv.checked_mul(x)?.checked_mul(&q_inv);
            let back_inv = |x: &Matrix| red.q.checked_mul(x)?.checked_mul(&red.p);
            seal(TwinCertificate {
                matrix: m.clone(),
                unit: back(&inner.unit)?,
                unit_inv: back_inv(&inner.unit_inv)?,
                plus_inv: back_inv(&inner.plus_inv)?,
                minus_inv: back_inv(&inner.minus_inv)?,
                method: Method::Edr,
            })
        }
    }
}

/// Recombines certificates over the local factors of `m`'s ring.
fn join_certificates(m: &Matrix, parts: &[TwinCertificate]) -> Result<TwinCertificate> {
    let ring = m.ring();
    let join = |f: fn(&TwinCertificate) -> &Matrix| {
        Matrix::join_local(ring, &parts.iter().map(|c| f(c).clone()).collect::<Vec<_>>())
    };
    seal(TwinCertificate {
        matrix: m.clone(),
        unit: join(|c| &c.unit),
        unit_inv: join(|c| &c.unit_inv),
        plus_inv: join(|c| &c.plus_inv),
        minus_inv: join(|c| &c.minus_inv),
        method: Method::Product,
    })
}

/// Component matrices of a matrix over a direct product.
fn product_components(m: &Matrix) -> Vec<Matrix> {
    let RingDescriptor::Product(cs) = m.ring() else { unreachable!() };
    cs.iter()
        .enumerate()
        .map(|(k, c)| {
            m.map_into(c, |x| match x {
                Element::Tuple(xs) => xs[k].clone(),
                _ => unreachable!(),
            })
            .expect("component of a product element")
        })
        .collect()
}

fn join_product_certificates(m: &Matrix, parts: &[TwinCertificate]) -> Result<TwinCertificate> {
    let ring = m.ring();
    let join = |f: fn(&TwinCertificate) -> &Matrix| -> Result<Matrix> {
        let n = m.rows();
        let data = (0..n * n)
            .map(|idx| Element::Tuple(parts.iter().map(|c| f(c).entries()[idx].clone()).collect()))
            .collect();
        Matrix::new(ring.clone(), n, n, data)
    };
    seal(TwinCertificate {
        matrix: m.clone(),
        unit: join(|c| &c.unit)?,
        unit_inv: join(|c| &c.unit_inv)?,
        plus_inv: join(|c| &c.plus_inv)?,
        minus_inv: join(|c| &c.minus_inv)?,
        method: Method::Product,
    })
}

/// `M = U1 + U2` with both summands units: `(M + U) + (-U)` from a twin certificate,
/// or, when `M` is not twin-good, the first `U1` in canonical order (over all
/// matrices, within `bound`) with `U1` and `M - U1` invertible.
pub fn two_sum_decompose(m: &Matrix, bound: u128) -> Result<TwoSumDecomposition> {
    match twin_decompose(m) {
        Ok(cert) => Ok(cert.two_sum()),
        Err(Error::NotTwinGood { .. }) => two_sum_search(m, bound),
        Err(e) => Err(e),
    }
}

fn two_sum_search(m: &Matrix, bound: u128) -> Result<TwoSumDecomposition> {
    let n = m.rows();
    let ring = m.ring();
    let whole = RingDescriptor::matrix_ring(ring.clone(), n)?;
    for cand in whole.elements(bound)? {
        let Element::Square(data) = cand else { unreachable!() };
        let first = Matrix::new(ring.clone(), n, n, data)?;
        let Some(first_inv) = first.inverse()? else { continue };
        let second = m.checked_sub(&first)?;
        if let Some(second_inv) = second.inverse()? {
            return Ok(TwoSumDecomposition { first, second, first_inv, second_inv, from_twin: false });
        }
    }
    Err(Error::NotTwoGood(format!("{} over {ring} is not a sum of two units", m.format_rows())))
}
