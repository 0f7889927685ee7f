use realchar_core::verify::{run, select, CheckId, OracleFile, Status, VerifyOptions, SCHEMA_VERSION};
use realchar_core::Error;

fn opts(dir: &std::path::Path) -> VerifyOptions {
    VerifyOptions {
        cache_dir: Some(dir.to_path_buf()),
        jobs: 2,
        ..VerifyOptions::default()
    }
}

#[test]
fn warm_cache_reproduces_the_cold_report() {
    let dir = tempfile::tempdir().unwrap();
    let cold = run("LEM23_COUNTS", &opts(dir.path())).unwrap();
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0, "nothing cached");
    let warm = run("LEM23_COUNTS", &opts(dir.path())).unwrap();
    assert_eq!(cold.len(), 1);
    assert_eq!(cold[0].without_timings(), warm[0].without_timings());
    assert!(cold[0].overall_pass);
}

#[test]
fn report_json_round_trips() {
    let r = run("LEM22_ARITH", &VerifyOptions { no_cache: true, ..VerifyOptions::default() }).unwrap();
    let json = serde_json::to_string(&r[0]).unwrap();
    let back: realchar_core::verify::VerificationReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r[0]);
    assert_eq!(back.schema_version, SCHEMA_VERSION);
    assert!(back.items.iter().all(|i| i.status == Status::Pass));
}

#[test]
fn check_ids_parse_and_unknown_ones_fail() {
    assert_eq!(select("all").unwrap().len(), CheckId::ALL.len());
    for id in CheckId::ALL {
        assert_eq!(id.as_str().parse::<CheckId>().unwrap(), id);
    }
    assert!(matches!(select("NOPE"), Err(Error::UnknownCheck(_))));
}

#[test]
fn pinned_oracles_have_no_unknown_keys() {
    let pinned = OracleFile::pinned().unwrap();
    let prefixes = ["real_orders/", "c_group/", "fingerprint/", "k_r/", "kfrak/"];
    assert!(pinned.values.keys().all(|k| prefixes.iter().any(|p| k.starts_with(p))));
}
