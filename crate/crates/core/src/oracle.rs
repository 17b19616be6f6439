//! Brute-force ground truth for small rings: twin witnesses, k-fold unit sumsets,
//! unit sum numbers, and criterion sweeps over ring families.
//!
//! The unit sum number follows the usual convention: the least `k` such that every
//! element is a sum of exactly `k` units, `omega` if every element is some finite
//! sum of units but no uniform `k` exists, and `infinity` otherwise.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::{Element, RingDescriptor};

pub const DEFAULT_K_MAX: usize = 8;

/// Enumerated elements of a ring with a unit table and an element index.
#[derive(Debug, Clone)]
pub struct RingTables {
    ring: RingDescriptor,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    is_unit: Vec<bool>,
    units: Vec<usize>,
}

impl RingTables {
    pub fn new(ring: &RingDescriptor, bound: u128) -> Result<Self> {
        let elements = ring.elements(bound)?;
        let index = elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let is_unit: Vec<bool> = elements.iter().map(|x| ring.is_unit(x).is_some()).collect();
        let units = (0..elements.len()).filter(|&i| is_unit[i]).collect();
        Ok(RingTables { ring: ring.clone(), elements, index, is_unit, units })
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn unit_count(&self) -> usize {
        self.units.len()
    }

    pub fn units(&self) -> impl Iterator<Item = &Element> {
        self.units.iter().map(|&i| &self.elements[i])
    }

    pub fn index_of(&self, x: &Element) -> Result<usize> {
        self.index.get(x).copied().ok_or_else(|| Error::NotAnElement {
            ring: self.ring.to_string(),
            literal: format!("{x:?}"),
        })
    }

    fn unit_at(&self, x: &Element) -> bool {
        self.is_unit[self.index[x]]
    }

    /// First unit (canonical order) `u` with `x + u` and `x - u` both units.
    pub fn twin_witness(&self, x: &Element) -> Option<&Element> {
        self.units().find(|u| {
            self.unit_at(&self.ring.add(x, u)) && self.unit_at(&self.ring.sub(x, u))
        })
    }

    /// `s + U(R)` as a membership vector.
    fn add_units(&self, s: &[bool]) -> Vec<bool> {
        let mut out = vec![false; self.order()];
        for (i, _) in s.iter().enumerate().filter(|(_, &b)| b) {
            for &u in &self.units {
                out[self.index[&self.ring.add(&self.elements[i], &self.elements[u])]] = true;
            }
        }
        out
    }

    /// The sumsets `S_1, ..., S_k_max`, where `S_k` holds the sums of exactly `k` units.
    pub fn sumsets(&self, k_max: usize) -> Vec<Vec<bool>> {
        let mut out: Vec<Vec<bool>> = Vec::with_capacity(k_max);
        if k_max == 0 {
            return out;
        }
        out.push(self.is_unit.clone());
        while out.len() < k_max {
            let next = self.add_units(out.last().unwrap());
            out.push(next);
        }
        out
    }

    pub fn unit_sum_number(&self) -> UnitSumNumber {
        // 0 = 1 + (-1), so S_k ⊆ S_{k+2}: the odd and even chains are each
        // increasing and stabilize; once both have, the sequence is 2-periodic.
        let full = |s: &[bool]| s.iter().all(|&b| b);
        let mut chain = vec![self.is_unit.clone()];
        loop {
            let last = chain.last().unwrap();
            if full(last) {
                return UnitSumNumber::Finite(chain.len());
            }
            let next = self.add_units(last);
            chain.push(next);
            let k = chain.len();
            if k >= 4 && chain[k - 1] == chain[k - 3] && chain[k - 2] == chain[k - 4] {
                let covered = (0..self.order()).all(|i| chain[k - 1][i] || chain[k - 2][i]);
                return if covered { UnitSumNumber::Omega } else { UnitSumNumber::Infinity };
            }
        }
    }
}

/// Convenience wrapper over [`RingTables::twin_witness`].
pub fn twin_witness(ring: &RingDescriptor, x: &Element, bound: u128) -> Result<Option<Element>> {
    let tables = RingTables::new(ring, bound)?;
    tables.index_of(x)?;
    Ok(tables.twin_witness(x).cloned())
}

/// Whether every element has a twin witness, with the first element that has none.
pub fn is_twin_good_ring(ring: &RingDescriptor, bound: u128) -> Result<(bool, Option<Element>)> {
    Ok(twin_verdict(&RingTables::new(ring, bound)?))
}

fn twin_verdict(tables: &RingTables) -> (bool, Option<Element>) {
    match tables.elements().iter().find(|x| tables.twin_witness(x).is_none()) {
        Some(x) => (false, Some(x.clone())),
        None => (true, None),
    }
}

pub fn is_k_good(ring: &RingDescriptor, x: &Element, k: usize, bound: u128) -> Result<bool> {
    let tables = RingTables::new(ring, bound)?;
    let i = tables.index_of(x)?;
    Ok(k > 0 && tables.sumsets(k)[k - 1][i])
}

pub fn k_good_ring(ring: &RingDescriptor, k: usize, bound: u128) -> Result<bool> {
    let tables = RingTables::new(ring, bound)?;
    Ok(k > 0 && tables.sumsets(k)[k - 1].iter().all(|&b| b))
}

pub fn unit_sum_number(ring: &RingDescriptor, bound: u128) -> Result<UnitSumNumber> {
    Ok(RingTables::new(ring, bound)?.unit_sum_number())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitSumNumber {
    Finite(usize),
    Omega,
    Infinity,
}

impl fmt::Display for UnitSumNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitSumNumber::Finite(k) => write!(f, "{k}"),
            UnitSumNumber::Omega => f.write_str("omega"),
            UnitSumNumber::Infinity => f.write_str("infinity"),
        }
    }
}

impl FromStr for UnitSumNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "omega" => Ok(UnitSumNumber::Omega),
            "infinity" => Ok(UnitSumNumber::Infinity),
            k => k
                .parse()
                .map(UnitSumNumber::Finite)
                .map_err(|_| Error::Parse(format!("bad unit sum number {k:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodnessReport {
    pub ring: RingDescriptor,
    pub twin_good: bool,
    /// First element (canonical order) without a twin witness.
    pub twin_failure_witness: Option<Element>,
    pub k_good_status: BTreeMap<usize, bool>,
    pub unit_sum_number: UnitSumNumber,
    /// Twin-good as predicted from the ring's structure: no direct factor ℤ/2 or ℤ/3.
    pub criterion_prediction: bool,
    pub agreement: bool,
}

pub fn check_ring(ring: &RingDescriptor, bound: u128, k_max: usize) -> Result<GoodnessReport> {
    let tables = RingTables::new(ring, bound)?;
    let (twin_good, twin_failure_witness) = twin_verdict(&tables);
    let k_good_status = tables
        .sumsets(k_max)
        .iter()
        .enumerate()
        .map(|(i, s)| (i + 1, s.iter().all(|&b| b)))
        .collect();
    let criterion_prediction = !ring.has_factor_z2_or_z3();
    Ok(GoodnessReport {
        ring: ring.clone(),
        twin_good,
        twin_failure_witness,
        k_good_status,
        unit_sum_number: tables.unit_sum_number(),
        criterion_prediction,
        agreement: twin_good == criterion_prediction,
    })
}

/// Checks every ring (in parallel), returning results in input order.
pub fn sweep(rings: &[RingDescriptor], bound: u128, k_max: usize) -> Vec<Result<GoodnessReport>> {
    rings.par_iter().map(|r| check_ring(r, bound, k_max)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::DEFAULT_EXHAUSTION_BOUND as B;

    fn z(n: u64) -> RingDescriptor {
        RingDescriptor::zmod(n).unwrap()
    }

    #[test]
    fn witnesses() {
        let r = Element::Residue;
        assert_eq!(twin_witness(&z(3), &r(0), B).unwrap(), Some(r(1)));
        assert_eq!(twin_witness(&z(3), &r(1), B).unwrap(), None);
        // u = 3 also works; u = 2 comes first
        assert_eq!(twin_witness(&z(5), &r(1), B).unwrap(), Some(r(2)));
        assert!(twin_witness(&z(5), &r(7), B).is_err());
    }

    #[test]
    fn ring_verdicts() {
        assert_eq!(is_twin_good_ring(&z(2), B).unwrap(), (false, Some(Element::Residue(1))));
        assert_eq!(is_twin_good_ring(&z(7), B).unwrap(), (true, None));
        let m2 = RingDescriptor::matrix_ring(z(2), 2).unwrap();
        let t = RingTables::new(&m2, B).unwrap();
        assert_eq!((t.order(), t.unit_count()), (16, 6));
        assert!(twin_verdict(&t).0);
    }

    #[test]
    fn two_goodness() {
        assert!(k_good_ring(&z(3), 2, B).unwrap());
        assert!(!k_good_ring(&z(2), 2, B).unwrap());
        assert!(!k_good_ring(&z(6), 2, B).unwrap());
        assert!(!is_k_good(&z(6), &Element::Residue(1), 2, B).unwrap());
        assert!(!is_k_good(&z(6), &Element::Residue(1), 0, B).unwrap());
    }

    #[test]
    fn unit_sum_numbers() {
        assert_eq!(unit_sum_number(&z(3), B).unwrap(), UnitSumNumber::Finite(2));
        assert_eq!(unit_sum_number(&z(2), B).unwrap(), UnitSumNumber::Omega);
        assert_eq!(unit_sum_number(&z(4), B).unwrap(), UnitSumNumber::Omega);
        assert_eq!(unit_sum_number(&z(6), B).unwrap(), UnitSumNumber::Omega);
        assert_eq!(unit_sum_number(&z(5), B).unwrap(), UnitSumNumber::Finite(2));
        for s in ["2", "omega", "infinity"] {
            assert_eq!(s.parse::<UnitSumNumber>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn field_sweep() {
        let rings: Vec<_> = (2..=5).map(|q| RingDescriptor::galois_field_of_order(q).unwrap()).collect();
        let verdicts: Vec<bool> = sweep(&rings, B, 4).into_iter().map(|r| r.unwrap().twin_good).collect();
        assert_eq!(verdicts, [false, false, true, true]);
    }

    #[test]
    fn report_for_gf3() {
        let rep = check_ring(&RingDescriptor::galois_field(3, 1).unwrap(), B, 3).unwrap();
        assert!(!rep.twin_good && !rep.criterion_prediction && rep.agreement);
        assert_eq!(rep.twin_failure_witness, Some(Element::Poly(vec![1])));
        assert_eq!(rep.unit_sum_number, UnitSumNumber::Finite(2));
        assert_eq!(rep.k_good_status.keys().copied().collect::<Vec<_>>(), [1, 2, 3]);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            check_ring(&z(1000), 100, 2),
            Err(Error::ExhaustionBoundExceeded { .. })
        ));
    }
}
