use std::time::Duration;

use qdiam::error::Error;
use qdiam::families::ForbiddenClass;
use qdiam::oracle::{max_admissible_family, max_diameter_family, OracleConfig};

#[test]
fn thread_count_does_not_change_exhaustive_results() {
    let one = max_diameter_family(2, 4, 3, true, &OracleConfig { threads: 1, ..OracleConfig::default() }).unwrap();
    let four = max_diameter_family(2, 4, 3, true, &OracleConfig { threads: 4, ..OracleConfig::default() }).unwrap();
    assert_eq!(one.optimum, four.optimum);
    assert_eq!(one.witnesses, four.witnesses);
    assert_eq!(one.witness_count, 120);
}

#[test]
fn witness_cap_truncates() {
    let cfg = OracleConfig { witness_cap: 5, ..OracleConfig::default() };
    let r = max_diameter_family(2, 4, 3, true, &cfg).unwrap();
    assert_eq!(r.witnesses.len(), 5);
    assert!(r.witnesses_truncated);
    assert_eq!(r.witness_count, 120);
}

#[test]
fn oversized_lattice_is_refused() {
    let r = max_diameter_family(2, 9, 4, false, &OracleConfig::default());
    assert!(matches!(r, Err(Error::BudgetExceeded { .. })));
}

#[test]
fn zero_timeout_is_not_proven() {
    let cfg = OracleConfig { timeout: Some(Duration::ZERO), ..OracleConfig::default() };
    let r = max_diameter_family(2, 5, 3, true, &cfg).unwrap();
    assert!(!r.proven_optimal);
    assert_eq!(r.exit_code(), 2);
}

#[test]
fn admissible_small_cases() {
    let cfg = OracleConfig::default();
    let a = max_admissible_family(2, 4, 2, ForbiddenClass::AEven, false, &cfg).unwrap();
    assert_eq!(a.optimum, 9u64);
    let b = max_admissible_family(2, 2, 4, ForbiddenClass::BEven, false, &cfg).unwrap();
    assert!(!b.feasible);
    let json: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(json["optimum"], "9");
    assert_eq!(json["parameters"]["class"], "a-even");
}
