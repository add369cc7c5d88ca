//! Validates the shipped octic fixtures end to end through the
//! file-based probe entry point: the dense fixture must reach full rank
//! within the documented sample budget, the degenerate fixture must
//! not, and both runs must be reproducible per seed.

use std::path::{Path, PathBuf};

use heisurf::surfaces::star3_rank_probe;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

#[test]
fn dense_fixture_reaches_full_rank_within_budget() {
    let report = star3_rank_probe(&fixture("dense_octic.txt"), 10007, 20, 42).unwrap();
    assert!(report.claim_verified);
    assert_eq!(report.probe.max_rank, 3);
    let witness = report.probe.witness.expect("witness recorded");
    assert_eq!(witness.rank, 3);
    assert!(witness.sample_index < 20);
}

#[test]
fn dense_fixture_probe_is_reproducible() {
    let a = star3_rank_probe(&fixture("dense_octic.txt"), 10007, 12, 7).unwrap();
    let b = star3_rank_probe(&fixture("dense_octic.txt"), 10007, 12, 7).unwrap();
    assert_eq!(format!("{:?}", a.probe), format!("{:?}", b.probe));
}

#[test]
fn dense_fixture_verifies_across_several_seeds() {
    for seed in [1u64, 2, 3, 77, 2026] {
        let report = star3_rank_probe(&fixture("dense_octic.txt"), 10007, 20, seed).unwrap();
        assert!(report.claim_verified, "seed {seed} failed to reach rank 3");
    }
}

#[test]
fn degenerate_fixture_stays_below_full_rank() {
    let report = star3_rank_probe(&fixture("degenerate_octic.txt"), 10007, 20, 42).unwrap();
    assert!(!report.claim_verified);
    assert!(report.probe.max_rank <= 2);
}

#[test]
fn bad_prime_is_rejected() {
    let err = star3_rank_probe(&fixture("dense_octic.txt"), 10, 4, 42).unwrap_err();
    assert!(matches!(err, heisurf::Error::BadPrime(10, _)));
}

#[test]
fn missing_file_is_a_file_error() {
    let err = star3_rank_probe(Path::new("/nonexistent/o.txt"), 10007, 4, 42).unwrap_err();
    assert!(matches!(err, heisurf::Error::FileError { .. }));
}
