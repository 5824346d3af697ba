use std::path::Path;

use num_traits::ToPrimitive;
use proptest::prelude::*;

use shimura::arith::{is_prime, prime_factors};
use shimura::curvedb::CurveDb;
use shimura::elliptic::EllipticCurve;

fn shipped_text() -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/curves.txt");
    std::fs::read_to_string(path).unwrap()
}

fn shipped() -> CurveDb {
    CurveDb::parse(&shipped_text(), "curves.txt").unwrap()
}

fn ints(e: &EllipticCurve) -> [i64; 5] {
    e.a_invariants().clone().map(|c| {
        assert!(c.is_integer());
        c.to_integer().to_i64().unwrap()
    })
}

/// `p + 1 - #E(F_p)` by counting the points of the reduction, the singular
/// one included.
fn trace_by_counting(a: [i64; 5], p: i64) -> i64 {
    let [a1, a2, a3, a4, a6] = a.map(|c| c.rem_euclid(p));
    let mut affine = 0;
    for x in 0..p {
        for y in 0..p {
            let lhs = y * y + a1 * x * y + a3 * y;
            let rhs = ((x * x % p) * x + a2 * x * x + a4 * x + a6) % p;
            if (lhs - rhs).rem_euclid(p) == 0 {
                affine += 1;
            }
        }
    }
    p + 1 - (affine + 1)
}

#[test]
fn shipped_database_shape() {
    let db = shipped();
    assert_eq!(db.len(), 131);
    for class in db.all_classes() {
        let primes = prime_factors(class.conductor);
        assert_eq!(primes.len(), 2, "{class}");
        assert_eq!(primes.iter().product::<u64>(), class.conductor);
        assert_eq!(class.strong_curve().class_index, 1, "{class}");
        let idx: Vec<u32> = class.members.iter().map(|r| r.class_index).collect();
        assert_eq!(idx, (1..=idx.len() as u32).collect::<Vec<_>>(), "{class}");
    }
}

#[test]
fn atkin_lehner_signs_match_point_counts() {
    // multiplicative reduction: a_p = -w_p
    let db = shipped();
    let mut checked = 0;
    for class in db.all_classes() {
        for rec in &class.members {
            for p in prime_factors(class.conductor) {
                let ap = trace_by_counting(ints(&rec.curve), p as i64);
                assert!(ap == 1 || ap == -1, "{}: a_{p} = {ap}", rec.label);
                assert_eq!(class.al_signs[&p] as i64, -ap, "{} at {p}", rec.label);
                checked += 1;
            }
        }
    }
    assert!(checked > 250);
}

#[test]
fn class_members_share_traces() {
    let db = shipped();
    let good: Vec<i64> = (3..60).filter(|&p| is_prime(p)).map(|p| p as i64).collect();
    for class in db.all_classes() {
        let strong = ints(&class.strong_curve().curve);
        for rec in &class.members {
            for &p in good.iter().filter(|&&p| class.conductor % p as u64 != 0) {
                assert_eq!(
                    trace_by_counting(ints(&rec.curve), p),
                    trace_by_counting(strong, p),
                    "{} at {p}",
                    rec.label
                );
            }
        }
    }
}

#[test]
fn distinct_classes_have_distinct_traces() {
    let db = shipped();
    for n in db.conductors() {
        let classes = db.classes(n);
        let traces: Vec<Vec<i64>> = classes
            .iter()
            .map(|c| {
                let a = ints(&c.strong_curve().curve);
                (3..60)
                    .filter(|&p| is_prime(p) && n % p != 0)
                    .map(|p| trace_by_counting(a, p as i64))
                    .collect()
            })
            .collect();
        for i in 0..traces.len() {
            for j in i + 1..traces.len() {
                assert_ne!(traces[i], traces[j], "{} and {}", classes[i], classes[j]);
            }
        }
    }
}

#[test]
fn malformed_lines_are_rejected() {
    for bad in [
        "26A1 26 A 1 1 0 1 -5",
        "26A1 26 A x 1 0 1 -5 -8",
        "26A1 26 A 1 1 0 1 -5 -8\n26A1 26 A 1 1 0 1 -5 -8",
        // good reduction at 13
        "26A1 26 A 1 0 0 0 0 1",
    ] {
        assert!(CurveDb::parse(bad, "test").is_err(), "{bad}");
    }
    assert!(CurveDb::parse("# comment only\n\n", "test")
        .unwrap()
        .is_empty());
}

#[test]
fn missing_file_is_an_io_error() {
    let err = CurveDb::load(Path::new("/nonexistent/curves.txt")).unwrap_err();
    assert!(err.to_string().contains("/nonexistent/curves.txt"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn record_order_is_irrelevant(
        lines in Just(shipped_text().lines().map(String::from).collect::<Vec<_>>()).prop_shuffle()
    ) {
        let shuffled = CurveDb::parse(&lines.join("\n"), "shuffled").unwrap();
        prop_assert_eq!(shuffled, shipped());
    }
}
