use super::local::LocalRing;
use super::Matrix;
use crate::error::{Error, Result};

/// Invertible `p`, `q` and diagonal `d` with `p · m · q = d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalReductionCertificate {
    pub p: Matrix,
    pub d: Matrix,
    pub q: Matrix,
}

impl DiagonalReductionCertificate {
    /// Replays the certificate against `m` by direct multiplication.
    pub fn verify(&self, m: &Matrix) -> bool {
        let Ok(pmq) = self.p.checked_mul(m).and_then(|pm| pm.checked_mul(&self.q)) else {
            return false;
        };
        pmq == self.d
            && self.d.is_diagonal()
            && self.p.is_invertible().unwrap_or(false)
            && self.q.is_invertible().unwrap_or(false)
    }
}

/// Diagonal reduction over ℤ/n, Galois fields and their products.
///
/// Each local factor is reduced by pivoting on an entry of minimal valuation, so the
/// diagonal there reads `p^v1, p^v2, ...` with `v1 <= v2 <= ...` (over a field,
/// `1, ..., 1, 0, ..., 0`). Already-diagonal input is returned unchanged with
/// identity transforms.
pub fn diagonal_reduction(m: &Matrix) -> Result<DiagonalReductionCertificate> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let ring = m.ring();
    let n = m.rows;
    if m.is_diagonal() {
        return Ok(DiagonalReductionCertificate {
            p: Matrix::identity(ring, n),
            d: m.clone(),
            q: Matrix::identity(ring, n),
        });
    }
    let (mut ps, mut ds, mut qs) = (Vec::new(), Vec::new(), Vec::new());
    for part in m.split_local() {
        let (p, d, q) = reduce_local(&LocalRing::of(&part.ring), &part);
        ps.push(p);
        ds.push(d);
        qs.push(q);
    }
    let cert = DiagonalReductionCertificate {
        p: Matrix::join_local(ring, &ps),
        d: Matrix::join_local(ring, &ds),
        q: Matrix::join_local(ring, &qs),
    };
    if !cert.verify(m) {
        return Err(Error::ConstructionVerificationFailed(format!(
            "diagonal reduction of {} over {ring}",
            m.format_rows()
        )));
    }
    Ok(cert)
}

fn reduce_local(local: &LocalRing<'_>, m: &Matrix) -> (Matrix, Matrix, Matrix) {
    let ring = m.ring().clone();
    let n = m.rows;
    let mut a = m.clone();
    let mut p = Matrix::identity(&ring, n);
    let mut q = Matrix::identity(&ring, n);

    for t in 0..n {
        let mut best: Option<(u32, usize, usize)> = None;
        for i in t..n {
            for j in t..n {
                let x = &a[(i, j)];
                if ring.is_zero(x) {
                    continue;
                }
                let v = local.valuation(x);
                if best.is_none_or(|(bv, _, _)| v < bv) {
                    best = Some((v, i, j));
                }
            }
        }
        let Some((v, i, j)) = best else { break };
        swap_rows(&mut a, t, i);
        swap_rows(&mut p, t, i);
        swap_cols(&mut a, t, j);
        swap_cols(&mut q, t, j);

        let w_inv = local.inverse_of_unit(&local.unit_part(&a[(t, t)]));
        scale_row(&mut a, t, &w_inv);
        scale_row(&mut p, t, &w_inv);
        let pivot = a[(t, t)].clone();
        debug_assert_eq!(pivot, local.valuation_representative(v));

        for i in t + 1..n {
            let c = local.divide(&a[(i, t)], &pivot);
            if !ring.is_zero(&c) {
                add_row_multiple(&mut a, i, t, &c);
                add_row_multiple(&mut p, i, t, &c);
            }
        }
        for j in t + 1..n {
            let c = local.divide(&a[(t, j)], &pivot);
            if !ring.is_zero(&c) {
                add_col_multiple(&mut a, j, t, &c);
                add_col_multiple(&mut q, j, t, &c);
            }
        }
    }
    (p, a, q)
}

fn swap_rows(m: &mut Matrix, i: usize, k: usize) {
    if i != k {
        for j in 0..m.cols {
            m.data.swap(i * m.cols + j, k * m.cols + j);
        }
    }
}

fn swap_cols(m: &mut Matrix, j: usize, k: usize) {
    if j != k {
        for i in 0..m.rows {
            m.data.swap(i * m.cols + j, i * m.cols + k);
        }
    }
}

fn scale_row(m: &mut Matrix, i: usize, c: &crate::ring::Element) {
    for j in 0..m.cols {
        let idx = i * m.cols + j;
        m.data[idx] = m.ring.mul(c, &m.data[idx]);
    }
}

/// row_target -= c · row_source
fn add_row_multiple(m: &mut Matrix, target: usize, source: usize, c: &crate::ring::Element) {
    for j in 0..m.cols {
        let delta = m.ring.mul(c, &m.data[source * m.cols + j]);
        let idx = target * m.cols + j;
        m.data[idx] = m.ring.sub(&m.data[idx], &delta);
    }
}

/// col_target -= c · col_source
fn add_col_multiple(m: &mut Matrix, target: usize, source: usize, c: &crate::ring::Element) {
    for i in 0..m.rows {
        let delta = m.ring.mul(c, &m.data[i * m.cols + source]);
        let idx = i * m.cols + target;
        m.data[idx] = m.ring.sub(&m.data[idx], &delta);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;

    #[test]
    fn diagonal_input_is_left_alone() {
        let ring = RingDescriptor::zmod(5).unwrap();
        let m = Matrix::from_ints(ring.clone(), &[vec![2, 0], vec![0, 3]]).unwrap();
        let cert = diagonal_reduction(&m).unwrap();
        assert_eq!(cert.d, m);
        assert!(cert.p.is_identity() && cert.q.is_identity());
    }

    #[test]
    fn swap_reduces_to_identity() {
        let ring = RingDescriptor::zmod(2).unwrap();
        let m = Matrix::from_ints(ring, &[vec![0, 1], vec![1, 0]]).unwrap();
        let cert = diagonal_reduction(&m).unwrap();
        assert!(cert.d.is_identity());
        assert!(cert.verify(&m));
    }

    #[test]
    fn prime_power_diagonal_is_sorted_by_valuation() {
        let ring = RingDescriptor::zmod(8).unwrap();
        let m = Matrix::from_ints(ring.clone(), &[vec![4, 2], vec![6, 0]]).unwrap();
        let cert = diagonal_reduction(&m).unwrap();
        assert!(cert.verify(&m));
        // [[4,2],[6,0]] has gcd of entries 2 and determinant -12 ≡ 4
        assert_eq!(cert.d.diagonal_entries(), vec![ring.from_int(2), ring.from_int(2)]);
    }

    #[test]
    fn empty_matrix() {
        let ring = RingDescriptor::zmod(6).unwrap();
        let m = Matrix::zero(&ring, 0, 0);
        let cert = diagonal_reduction(&m).unwrap();
        assert_eq!(cert.d.rows(), 0);
        assert!(cert.verify(&m));
    }
}
