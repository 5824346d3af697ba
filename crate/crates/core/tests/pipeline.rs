use std::path::Path;

use shimura::curvedb::CurveDb;
use shimura::pipeline::{
    candidate_set, cmd_candidates, cmd_enumerate, cmd_genus, cmd_graph, cmd_sieve, cmd_verify,
    Status, DEFAULT_MAX_PHI,
};
use shimura::Error;

fn db() -> CurveDb {
    CurveDb::load(&Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/curves.txt")).unwrap()
}

#[test]
fn full_verification() {
    let report = cmd_verify(&db(), DEFAULT_MAX_PHI).unwrap();
    assert!(report.is_success(), "{:?}", report.mismatches());
    let ambiguous: Vec<&str> = report
        .items()
        .filter(|(_, i)| i.status == Status::AmbiguousAsExpected)
        .map(|(_, i)| i.key.as_str())
        .collect();
    assert_eq!(ambiguous.len(), 8, "{ambiguous:?}");
    for key in [
        "verdict:91/91/1",
        "verdict:91/91/2",
        "verdict:254/254/1",
        "verdict:254/254/2",
    ] {
        assert!(ambiguous.contains(&key), "{key}");
    }
    // the misprinted candidate is matched on invariants, not on the string
    let c = report.item("candidate:91/91/3").unwrap();
    assert_eq!(c.status, Status::Match);
    for d in [26, 38, 58] {
        assert_eq!(
            report.item(&format!("XD:{d}")).unwrap().status,
            Status::Match
        );
    }
}

#[test]
fn verification_is_deterministic() {
    let db = db();
    let a = cmd_verify(&db, DEFAULT_MAX_PHI).unwrap();
    let b = cmd_verify(&db, DEFAULT_MAX_PHI).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn sieve_report_for_142() {
    let report = cmd_sieve(&db(), 142, 2).unwrap();
    assert!(report.is_success());
    let survivors = report.item("survivors:142/2").unwrap();
    assert_eq!(survivors.status, Status::Match);
}

#[test]
fn candidates_follow_the_forward_gluing() {
    let set = candidate_set(&db(), 155, 155).unwrap();
    assert_eq!(set.classes, ["155A".to_string(), "155C".to_string()]);
    let ids: Vec<String> = set.candidates.iter().map(|c| c.id()).collect();
    assert_eq!(ids, ["155/155/1", "155/155/2"]);
    assert_eq!(
        set.candidates[0].model.to_string(),
        "y^2 = 25x^6 - 19x^4 + 11x^2 - 1"
    );
    assert_eq!(
        set.candidates[1].model.to_string(),
        "3y^2 = 961x^6 - 483x^4 - 45x^2 - 1"
    );
}

#[test]
fn errors_for_invalid_cases() {
    let db = db();
    assert!(matches!(
        cmd_candidates(&db, 91, 7),
        Err(Error::InvalidCase(_))
    ));
    assert!(cmd_candidates(&db, 35, 5).is_err());
    assert!(cmd_genus(30, None).is_err());
    assert!(cmd_graph(26, 3).is_err());
    assert!(cmd_sieve(&db, 93, 3).is_err());
}

#[test]
fn smaller_scans_report_subsets() {
    let small = cmd_enumerate(100).unwrap();
    let full = cmd_enumerate(DEFAULT_MAX_PHI).unwrap();
    assert!(small.is_success() && full.is_success());
    let keys = |r: &shimura::pipeline::VerificationReport| -> Vec<String> {
        r.items()
            .map(|(_, i)| i.key.clone())
            .filter(|k| k.starts_with("pair:"))
            .collect()
    };
    let (s, f) = (keys(&small), keys(&full));
    assert!(s.iter().all(|k| f.contains(k)));
    assert_eq!(f.len(), 39 + 39);
    assert!(s.len() < f.len());
}
