//! Dense matrices over commutative finite rings.

mod local;
mod reduce;

use std::ops::Index;

pub use reduce::{diagonal_reduction, DiagonalReductionCertificate};

use crate::error::{Error, Result};
use crate::ring::{Element, RingDescriptor};
use local::LocalRing;

/// Largest size for which the determinant is computed by cofactor expansion.
const COFACTOR_LIMIT: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: RingDescriptor,
    rows: usize,
    cols: usize,
    data: Vec<Element>,
}

impl Matrix {
    pub fn new(ring: RingDescriptor, rows: usize, cols: usize, data: Vec<Element>) -> Result<Self> {
        if !ring.is_commutative() || matches!(ring, RingDescriptor::MatrixRing { .. }) {
            return Err(Error::UnsupportedRing {
                ring: ring.to_string(),
                reason: "matrix entries must come from a commutative scalar ring".into(),
            });
        }
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|x| !ring.contains(x)) {
            return Err(Error::NotAnElement { ring: ring.to_string(), literal: format!("{bad:?}") });
        }
        Ok(Matrix { ring, rows, cols, data })
    }

    pub fn from_rows(ring: RingDescriptor, rows: Vec<Vec<Element>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("rows have different lengths".into()));
        }
        Matrix::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    /// Matrix of integer images, e.g. `from_ints(Z/5, &[vec![1, 2], vec![3, 4]])`.
    pub fn from_ints(ring: RingDescriptor, rows: &[Vec<i128>]) -> Result<Self> {
        let elems = rows
            .iter()
            .map(|row| row.iter().map(|&v| ring.from_int(v)).collect())
            .collect();
        Matrix::from_rows(ring, elems)
    }

    pub fn zero(ring: &RingDescriptor, rows: usize, cols: usize) -> Self {
        Matrix { ring: ring.clone(), rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &RingDescriptor, n: usize) -> Self {
        let mut m = Matrix::zero(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = ring.one();
        }
        m
    }

    pub fn diagonal(ring: &RingDescriptor, entries: &[Element]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zero(ring, n, n);
        for (i, x) in entries.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Element] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Element] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Element) {
        assert!(i < self.rows && j < self.cols);
        debug_assert!(self.ring.contains(&x));
        self.data[i * self.cols + j] = x;
    }

    pub fn diagonal_entries(&self) -> Vec<Element> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        let zero = self.ring.zero();
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)] == zero))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(&self.ring, self.rows)
    }

    fn check_same_ring(&self, other: &Matrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.ring.add(a, b)).collect();
        Ok(Matrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = &self.ring;
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = ring.zero();
                for t in 0..self.cols {
                    acc = ring.add(&acc, &ring.mul(&self[(i, t)], &other[(t, j)]));
                }
                data.push(acc);
            }
        }
        Ok(Matrix { ring: ring.clone(), rows: self.rows, cols: other.cols, data })
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| self.ring.neg(a)).collect();
        Matrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Element) -> Matrix {
        let data = self.data.iter().map(|a| self.ring.mul(c, a)).collect();
        Matrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { ring: self.ring.clone(), rows: self.cols, cols: self.rows, data }
    }

    /// Same entries read in another ring through `f`.
    pub fn map_into(&self, ring: &RingDescriptor, f: impl Fn(&Element) -> Element) -> Result<Matrix> {
        Matrix::new(ring.clone(), self.rows, self.cols, self.data.iter().map(f).collect())
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Determinant: cofactor expansion up to size 4, otherwise elimination on each
    /// local factor of the ring, recombined.
    pub fn det(&self) -> Result<Element> {
        let n = self.require_square()?;
        if n <= COFACTOR_LIMIT {
            return Ok(self.det_cofactor());
        }
        let parts: Vec<Element> = self
            .split_local()
            .iter()
            .map(|m| LocalRing::of(&m.ring).det(m))
            .collect();
        Ok(self.ring.join_local(&parts))
    }

    fn det_cofactor(&self) -> Element {
        let ring = &self.ring;
        let n = self.rows;
        match n {
            0 => ring.one(),
            1 => self.data[0].clone(),
            2 => ring.sub(
                &ring.mul(&self.data[0], &self.data[3]),
                &ring.mul(&self.data[1], &self.data[2]),
            ),
            _ => {
                let mut acc = ring.zero();
                for j in 0..n {
                    if ring.is_zero(&self[(0, j)]) {
                        continue;
                    }
                    let term = ring.mul(&self[(0, j)], &self.minor(0, j).det_cofactor());
                    acc = if j % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
                }
                acc
            }
        }
    }

    fn minor(&self, row: usize, col: usize) -> Matrix {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != row) {
            for j in (0..self.cols).filter(|&j| j != col) {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { ring: self.ring.clone(), rows: self.rows - 1, cols: self.cols - 1, data }
    }

    /// Two-sided inverse, or `None` when the determinant is not a unit.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        self.require_square()?;
        let mut parts = Vec::new();
        for m in self.split_local() {
            match LocalRing::of(&m.ring).inverse(&m) {
                Some(inv) => parts.push(inv),
                None => return Ok(None),
            }
        }
        Ok(Some(Matrix::join_local(&self.ring, &parts)))
    }

    pub fn is_invertible(&self) -> Result<bool> {
        Ok(self.ring.is_unit(&self.det()?).is_some())
    }

    /// Images of this matrix in each local factor of its ring.
    pub fn split_local(&self) -> Vec<Matrix> {
        let factors = self.ring.local_factors();
        let mut parts: Vec<Vec<Element>> = vec![Vec::with_capacity(self.data.len()); factors.len()];
        for x in &self.data {
            for (slot, y) in parts.iter_mut().zip(self.ring.split_local(x)) {
                slot.push(y);
            }
        }
        factors
            .into_iter()
            .zip(parts)
            .map(|(ring, data)| Matrix { ring, rows: self.rows, cols: self.cols, data })
            .collect()
    }

    /// Inverse of [`Matrix::split_local`].
    pub fn join_local(ring: &RingDescriptor, parts: &[Matrix]) -> Matrix {
        let (rows, cols) = (parts[0].rows, parts[0].cols);
        let data = (0..rows * cols)
            .map(|idx| {
                let xs: Vec<Element> = parts.iter().map(|m| m.data[idx].clone()).collect();
                ring.join_local(&xs)
            })
            .collect();
        Matrix { ring: ring.clone(), rows, cols, data }
    }

    /// Rows in literal syntax, e.g. `[[1, 0], [0, 1]]`.
    pub fn format_rows(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> =
                    self.row(i).iter().map(|x| self.ring.format_element(x)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }

    /// Parses rows in literal syntax over `ring`.
    pub fn parse_rows(ring: &RingDescriptor, text: &str) -> Result<Matrix> {
        use crate::ring::parse::{parse_literal, Literal};
        let Literal::List(rows) = parse_literal(text)? else {
            return Err(Error::Parse(format!("rows must be a list of lists, got {text:?}")));
        };
        let rows = rows
            .iter()
            .map(|row| match row {
                Literal::List(cells) => cells.iter().map(|c| ring.element_from_literal(c)).collect(),
                _ => Err(Error::Parse(format!("row {row} is not a list"))),
            })
            .collect::<Result<Vec<Vec<Element>>>>()?;
        Matrix::from_rows(ring.clone(), rows)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Element;

    fn index(&self, (i, j): (usize, usize)) -> &Element {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> RingDescriptor {
        RingDescriptor::zmod(n).unwrap()
    }

    #[test]
    fn small_product() {
        let a = Matrix::from_ints(z(2), &[vec![1, 1], vec![0, 1]]).unwrap();
        let b = Matrix::from_ints(z(2), &[vec![1, 0], vec![1, 1]]).unwrap();
        let expected = Matrix::from_ints(z(2), &[vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(a.checked_mul(&b).unwrap(), expected);
    }

    #[test]
    fn identity_and_zero_laws() {
        let a = Matrix::from_ints(z(7), &[vec![3, 5, 1], vec![0, 6, 2], vec![4, 4, 4]]).unwrap();
        let i = Matrix::identity(&z(7), 3);
        assert_eq!(i.checked_mul(&a).unwrap(), a);
        let zero = Matrix::zero(&z(7), 3, 3);
        assert_eq!(a.checked_mul(&zero).unwrap(), zero);
    }

    #[test]
    fn shape_and_ring_errors() {
        let a = Matrix::identity(&z(5), 2);
        let b = Matrix::identity(&z(5), 3);
        assert!(matches!(a.checked_mul(&b), Err(Error::ShapeMismatch(_))));
        assert!(matches!(a.checked_add(&b), Err(Error::ShapeMismatch(_))));
        let c = Matrix::identity(&z(7), 2);
        assert!(matches!(a.checked_mul(&c), Err(Error::RingMismatch { .. })));
        let rect = Matrix::zero(&z(5), 2, 3);
        assert!(matches!(rect.det(), Err(Error::NotSquare { .. })));
        assert!(matches!(rect.inverse(), Err(Error::NotSquare { .. })));
        let m2 = RingDescriptor::matrix_ring(z(2), 2).unwrap();
        assert!(Matrix::new(m2, 0, 0, vec![]).is_err());
    }

    #[test]
    fn determinant_examples() {
        for ring in [z(2), z(12), RingDescriptor::galois_field(2, 2).unwrap()] {
            assert_eq!(Matrix::identity(&ring, 3).det().unwrap(), ring.one());
        }
        let zero_row = Matrix::from_ints(z(9), &[vec![1, 2, 3], vec![0, 0, 0], vec![4, 5, 6]]).unwrap();
        assert_eq!(zero_row.det().unwrap(), Element::Residue(0));
        let m = Matrix::from_ints(z(5), &[vec![2, 3], vec![1, 4]]).unwrap();
        assert_eq!(m.det().unwrap(), Element::Residue(0));
    }

    #[test]
    fn elimination_det_matches_cofactors() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for ring in [z(12), z(8), z(30), RingDescriptor::galois_field(3, 2).unwrap()] {
            for n in 1..=6 {
                for _ in 0..20 {
                    let data = (0..n * n).map(|_| ring.random_element(&mut rng)).collect();
                    let m = Matrix::new(ring.clone(), n, n, data).unwrap();
                    let parts: Vec<Element> =
                        m.split_local().iter().map(|p| LocalRing::of(&p.ring).det(p)).collect();
                    assert_eq!(ring.join_local(&parts), m.det_cofactor(), "{m:?}");
                }
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let ring = z(4);
        assert_eq!(
            Matrix::identity(&ring, 3).inverse().unwrap(),
            Some(Matrix::identity(&ring, 3))
        );
        let two = Matrix::from_ints(ring, &[vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(two.inverse().unwrap(), None);
        let m = Matrix::from_ints(z(12), &[vec![1, 2], vec![3, 7]]).unwrap();
        let inv = m.inverse().unwrap().unwrap();
        assert!(m.checked_mul(&inv).unwrap().is_identity());
        assert!(inv.checked_mul(&m).unwrap().is_identity());
    }

    #[test]
    fn rows_roundtrip_through_text() {
        let gf4 = RingDescriptor::galois_field(2, 2).unwrap();
        let m = Matrix::parse_rows(&gf4, "[[ (1,0), 1 ], [0, (1,1)]]").unwrap();
        assert_eq!(m.format_rows(), "[[(1,0), (0,1)], [(0,0), (1,1)]]");
        assert_eq!(Matrix::parse_rows(&gf4, &m.format_rows()).unwrap(), m);
        assert!(Matrix::parse_rows(&z(5), "[[1, 2], [3]]").is_err());
        assert!(Matrix::parse_rows(&z(5), "[1, 2]").is_err());
    }
}
