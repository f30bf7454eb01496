//! Contract tests for the suite runner: determinism, aggregation, and the
//! configuration-error path.

use dvlab::report::{run_suite, Config};

#[test]
fn reruns_with_the_same_config_are_identical() {
    let cfg = Config::default();
    for suite in ["table1", "heegner", "monomials", "sl3"] {
        let a = run_suite(suite, &cfg).unwrap();
        let b = run_suite(suite, &cfg).unwrap();
        assert_eq!(a.to_json(), b.to_json(), "suite {suite} is not deterministic");
    }
}

#[test]
fn the_all_suite_aggregates_with_zero_failures() {
    let r = run_suite("all", &Config::default()).unwrap();
    assert!(r.cases.len() >= 90);
    assert_eq!(r.failures(), 0, "{}", r.to_text());
    // JSON and CSV renderings carry the same case set
    assert_eq!(r.to_csv().lines().count(), r.cases.len() + 1);
}

#[test]
fn bad_configuration_is_rejected() {
    assert!(run_suite("all", &Config { prime: 9, ..Config::default() }).is_err());
    assert!(run_suite("bogus", &Config::default()).is_err());
}
