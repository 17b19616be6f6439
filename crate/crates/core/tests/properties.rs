mod common;

use common::*;
use proptest::prelude::*;
use twinring::oracle::{check_ring, sweep, RingTables};
use twinring::format::report_document;
use twinring::twin::{edr_unit, edr_unit_inverse, twin_decompose};
use twinring::{diagonal_reduction, Element, Matrix, RingDescriptor};

const SMALL_RINGS: &[&str] = &[
    "Z/2", "Z/3", "Z/4", "Z/6", "Z/8", "Z/9", "GF(4)", "GF(8)", "Z/2 x Z/2", "Z/2 x Z/3", "Z/4 x GF(4)",
    "M(2, Z/2)",
];

const MATRIX_SCALARS: &[&str] = &[
    "Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/8", "Z/9", "Z/12", "Z/30", "Z/49", "GF(4)", "GF(9)", "GF(8)",
    "Z/2 x Z/3", "Z/4 x GF(4)", "GF(5) x Z/9",
];

#[test]
fn ring_axioms_exhaustive() {
    for name in SMALL_RINGS {
        let r = ring(name);
        let elems = r.elements(1 << 8).unwrap();
        assert_eq!(elems.len() as u128, r.order().unwrap(), "{name}");
        let (zero, one) = (r.zero(), r.one());
        for a in &elems {
            assert!(r.contains(a));
            assert_eq!(r.add(a, &zero), *a);
            assert_eq!(r.mul(a, &one), *a);
            assert_eq!(r.mul(&one, a), *a);
            assert!(r.is_zero(&r.add(a, &r.neg(a))));
            for b in &elems {
                assert_eq!(r.add(a, b), r.add(b, a));
                if r.is_commutative() {
                    assert_eq!(r.mul(a, b), r.mul(b, a), "{name}");
                }
            }
        }
        let limit = if elems.len() <= 16 { elems.len() } else { 9 };
        for a in &elems[..limit] {
            for b in &elems {
                for c in &elems[..limit] {
                    assert_eq!(r.mul(&r.mul(a, b), c), r.mul(a, &r.mul(b, c)), "{name}");
                    assert_eq!(r.mul(a, &r.add(b, c)), r.add(&r.mul(a, b), &r.mul(a, c)), "{name}");
                    assert_eq!(r.mul(&r.add(a, b), c), r.add(&r.mul(a, c), &r.mul(b, c)), "{name}");
                }
            }
        }
    }
}

#[test]
fn units_match_search() {
    for name in SMALL_RINGS.iter().chain(&["GF(9)", "Z/36", "GF(27)"]) {
        let r = ring(name);
        for x in r.elements(1 << 10).unwrap() {
            let inv = r.is_unit(&x);
            assert_eq!(inv.is_some(), is_unit_by_search(&r, &x), "{name} {x:?}");
            if let Some(y) = inv {
                assert_eq!(r.mul(&x, &y), r.one());
                assert_eq!(r.mul(&y, &x), r.one());
            }
        }
    }
}

#[test]
fn jacobson_radical_structural_matches_generic() {
    let mut names: Vec<String> = (2..=64).map(|n| format!("Z/{n}")).collect();
    names.extend(["GF(4)", "GF(8)", "Z/4 x Z/9", "Z/8 x GF(4)", "M(2, Z/2)", "M(2, Z/4)"].map(String::from));
    for name in &names {
        let r = ring(name);
        let mut a = r.jacobson_radical(1 << 16).unwrap();
        let mut b = r.jacobson_radical_generic(1 << 16).unwrap();
        a.sort();
        b.sort();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn small_factor_detection_matches_ideal_oracle() {
    let mut names: Vec<String> = (2..=36).map(|n| format!("Z/{n}")).collect();
    names.extend(
        [
            "GF(2)", "GF(3)", "GF(4)", "Z/2 x Z/2", "Z/3 x GF(4)", "Z/4 x Z/9", "GF(4) x GF(5)", "Z/5 x Z/7",
            "Z/25 x Z/2", "M(1, Z/6)", "M(1, Z/5)", "M(2, Z/2)", "M(2, Z/3)", "M(2, Z/4)",
        ]
        .map(String::from),
    );
    for name in &names {
        let r = ring(name);
        assert_eq!(r.has_factor_z2_or_z3(), has_small_quotient_by_ideals(&r), "{name}");
    }
}

#[test]
fn sumsets_match_nested_enumeration() {
    for n in 2..=64u64 {
        let t = RingTables::new(&RingDescriptor::zmod(n).unwrap(), 1 << 16).unwrap();
        let sets = t.sumsets(4);
        for k in 1..=4 {
            assert_eq!(sets[k - 1], zn_sumset_nested(n, k), "Z/{n} k={k}");
        }
    }
    for name in ["GF(4)", "GF(8)", "Z/2 x Z/3", "M(2, Z/2)"] {
        let r = ring(name);
        let t = RingTables::new(&r, 1 << 16).unwrap();
        for (k, set) in t.sumsets(3).iter().enumerate() {
            let ours: Vec<Element> =
                t.elements().iter().zip(set).filter(|(_, &b)| b).map(|(x, _)| x.clone()).collect();
            assert_eq!(ours, sumset_nested(&r, k + 1), "{name} k={}", k + 1);
        }
    }
}

#[test]
fn twin_good_rings_are_two_good_and_reports_are_deterministic() {
    let rings: Vec<RingDescriptor> = (2..=40)
        .map(|n| RingDescriptor::zmod(n).unwrap())
        .chain(["GF(4)", "GF(8)", "GF(9)", "M(2, Z/2)", "M(2, Z/3)", "Z/5 x Z/7", "Z/4 x Z/5"].map(ring))
        .collect();
    let first = sweep(&rings, 1 << 16, 3);
    let second = sweep(&rings, 1 << 16, 3);
    for ((r, a), b) in rings.iter().zip(&first).zip(&second) {
        assert_eq!(report_document(r, a).to_string(), report_document(r, b).to_string());
        let rep = a.as_ref().unwrap();
        assert!(rep.agreement, "{r}");
        if rep.twin_good {
            assert!(rep.k_good_status[&2], "{r}");
        } else {
            let x = rep.twin_failure_witness.as_ref().unwrap();
            let t = RingTables::new(r, 1 << 16).unwrap();
            assert!(t.twin_witness(x).is_none());
        }
    }
}

#[test]
fn zn_oracle_matches_integer_search() {
    for n in 2..=60 {
        let rep = check_ring(&RingDescriptor::zmod(n).unwrap(), 1 << 16, 2).unwrap();
        assert_eq!(rep.twin_good, zn_twin_good(n), "Z/{n}");
    }
}

/// Every 1x1 matrix gets a certificate iff the oracle finds the ring twin-good, and
/// each certificate's unit is an oracle witness.
#[test]
fn one_by_one_construction_matches_oracle() {
    let names: Vec<String> = (2..=30)
        .map(|n| format!("Z/{n}"))
        .chain(["GF(4)", "GF(8)", "GF(9)", "Z/5 x GF(4)", "Z/3 x Z/5"].map(String::from))
        .collect();
    for name in &names {
        let r = ring(name);
        let t = RingTables::new(&r, 1 << 16).unwrap();
        let ring_good = t.elements().iter().all(|x| t.twin_witness(x).is_some());
        for x in t.elements() {
            let m = Matrix::new(r.clone(), 1, 1, vec![x.clone()]).unwrap();
            match twin_decompose(&m) {
                Ok(c) => {
                    assert!(ring_good && c.verify(), "{name} {x:?}");
                    let u = &c.unit[(0, 0)];
                    assert!(t.units().any(|v| v == u));
                    assert!(r.is_unit(&r.add(x, u)).is_some() && r.is_unit(&r.sub(x, u)).is_some());
                }
                Err(e) => assert!(!ring_good, "{name} {x:?}: {e}"),
            }
        }
    }
}

#[test]
fn det_matches_leibniz_and_invertibility() {
    let mut g = rng(7);
    for name in MATRIX_SCALARS {
        let r = ring(name);
        for n in 0..=5 {
            for _ in 0..12 {
                let m = random_matrix(&r, n, &mut g);
                assert_eq!(m.det().unwrap(), leibniz_det(&m), "{name} {}", m.format_rows());
                let inv = m.inverse().unwrap();
                assert_eq!(inv.is_some(), invertible_by_det(&m), "{name} {}", m.format_rows());
                if let Some(inv) = inv {
                    assert!(m.checked_mul(&inv).unwrap().is_identity());
                    assert!(inv.checked_mul(&m).unwrap().is_identity());
                }
            }
        }
    }
}

#[test]
fn field_reduction_rank_matches_minors() {
    let mut g = rng(11);
    for name in ["Z/2", "Z/3", "GF(4)", "Z/7"] {
        let r = ring(name);
        for n in 1..=4 {
            for _ in 0..40 {
                let mut m = random_matrix(&r, n, &mut g);
                // bias towards low rank: duplicate a row now and then
                if n > 1 && g.random_bool(0.5) {
                    for j in 0..n {
                        let x = m[(0, j)].clone();
                        m.set(n - 1, j, x);
                    }
                }
                let cert = diagonal_reduction(&m).unwrap();
                let rank = cert.d.diagonal_entries().iter().filter(|x| !r.is_zero(x)).count();
                assert_eq!(rank, rank_by_minors(&m), "{name} {}", m.format_rows());
            }
        }
    }
}

/// Over a commutative ring, the shifted-cycle unit has det(D + U) = (-1)^(n-1) and
/// det(D - U) = -1 for every diagonal D.
#[test]
fn shifted_cycle_determinants() {
    let mut g = rng(5);
    for name in ["Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/12", "GF(4)", "GF(9)", "Z/2 x Z/3"] {
        let r = ring(name);
        for n in 3..=6usize {
            let plus = r.from_int(if n % 2 == 1 { 1 } else { -1 });
            let minus = r.from_int(-1);
            for _ in 0..30 {
                let d: Vec<Element> = (0..n).map(|_| r.random_element(&mut g)).collect();
                let dm = Matrix::diagonal(&r, &d);
                let u = edr_unit(&d, &r);
                assert_eq!(leibniz_det(&dm.checked_add(&u).unwrap()), plus, "{name} n={n}");
                assert_eq!(leibniz_det(&dm.checked_sub(&u).unwrap()), minus, "{name} n={n}");
            }
        }
    }
}

fn matrix_strategy() -> impl Strategy<Value = Matrix> {
    (0..MATRIX_SCALARS.len(), 1usize..=5, any::<u64>()).prop_map(|(i, n, seed)| {
        random_matrix(&ring(MATRIX_SCALARS[i]), n, &mut rng(seed))
    })
}

use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn twin_certificates_verify(m in matrix_strategy()) {
        match twin_decompose(&m) {
            Ok(cert) => {
                prop_assert!(cert.verify());
                prop_assert_eq!(&cert.matrix, &m);
                let plus = cert.plus();
                prop_assert!(plus.checked_mul(&cert.plus_inv).unwrap().is_identity());
            }
            Err(twinring::Error::NotTwinGood { .. }) => {
                prop_assert_eq!(m.rows(), 1);
                prop_assert!(!twinring::oracle::is_twin_good_ring(m.ring(), 1 << 16).unwrap().0);
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn diagonal_reduction_contract(m in matrix_strategy()) {
        let cert = diagonal_reduction(&m).unwrap();
        let pmq = cert.p.checked_mul(&m).unwrap().checked_mul(&cert.q).unwrap();
        prop_assert_eq!(&pmq, &cert.d);
        prop_assert!(cert.d.is_diagonal());
        prop_assert!(invertible_by_det(&cert.p));
        prop_assert!(invertible_by_det(&cert.q));
    }

    #[test]
    fn shifted_cycle_inverse(i in 0..MATRIX_SCALARS.len(), n in 3usize..=6, seed in any::<u64>()) {
        let r = ring(MATRIX_SCALARS[i]);
        let mut g = rng(seed);
        let d: Vec<Element> = (0..n).map(|_| r.random_element(&mut g)).collect();
        let u = edr_unit(&d, &r);
        let a = edr_unit_inverse(&d, &r);
        prop_assert!(u.checked_mul(&a).unwrap().is_identity());
        prop_assert!(a.checked_mul(&u).unwrap().is_identity());
    }

    #[test]
    fn literals_roundtrip(m in matrix_strategy()) {
        let text = m.format_rows();
        prop_assert_eq!(Matrix::parse_rows(m.ring(), &text).unwrap(), m.clone());
        let desc = m.ring().to_string();
        prop_assert_eq!(&desc.parse::<RingDescriptor>().unwrap(), m.ring());
    }

    #[test]
    fn descriptor_parsing_never_panics(s in "[ZGFMx/()0-9, .*-]{0,16}") {
        let _ = s.parse::<RingDescriptor>();
        let _ = twinring::ring::parse::parse_family(&s);
    }
}
