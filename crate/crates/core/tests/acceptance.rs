//! Acceptance suite: criteria 1 to 12 through the library self-test, and
//! criterion 13 by re-running it on a different worker count and comparing
//! the serialized reports byte for byte.
//!
//! Tolerances live in `supergroup::selftest` and are pinned here so that a
//! change there fails this target.

use supergroup::precision::Precision;
use supergroup::selftest::{
    run_selftest, SelftestReport, BRUTE_FORCE_TOL_EXP, CONFLUENT_SLOPE, CONFLUENT_SLOPE_SPREAD, CONJECTURE_MAX_N,
    CONJECTURE_PRACTICAL_TOL,
};

const SEED: u64 = 42;

fn run_on(threads: usize) -> SelftestReport {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(|| run_selftest(SEED, &Precision::default()).unwrap())
}

#[test]
fn pinned_tolerances() {
    assert_eq!(BRUTE_FORCE_TOL_EXP, -200);
    assert_eq!(CONJECTURE_PRACTICAL_TOL, 1e-40);
    assert_eq!(CONJECTURE_MAX_N, 8);
    assert_eq!(CONFLUENT_SLOPE, 100.0);
    assert_eq!(CONFLUENT_SLOPE_SPREAD, 1.5);
    let p = Precision::default();
    assert_eq!((p.bits, p.truncation_cap), (256, 512));
}

#[test]
fn acceptance_suite() {
    let report = run_on(4);
    let mut failed = Vec::new();
    for c in &report.criteria {
        println!("[{}] criterion {:>2}: {} ({})", if c.pass { "PASS" } else { "FAIL" }, c.id, c.name, c.detail);
        if !c.pass {
            failed.push(c.id);
        }
    }
    assert_eq!(report.criteria.len(), 12);

    let again = run_on(1);
    let same = serde_json::to_vec(&report).unwrap() == serde_json::to_vec(&again).unwrap();
    println!(
        "[{}] criterion 13: determinism (4 workers vs 1 worker, byte-identical report)",
        if same { "PASS" } else { "FAIL" }
    );
    if !same {
        failed.push(13);
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
