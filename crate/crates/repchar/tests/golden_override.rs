use std::path::PathBuf;
use std::process::Command;

use repchar::golden::{GoldenTable, TABLE_FILE};

const EMBEDDED: &str = include_str!("../golden/table1.json");

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("repchar-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn load_from_dir_reads_the_same_table() {
    let dir = scratch_dir("copy");
    std::fs::write(dir.join(TABLE_FILE), EMBEDDED).unwrap();
    let from_dir = GoldenTable::load_from_dir(&dir).unwrap();
    assert_eq!(from_dir, GoldenTable::parse(EMBEDDED).unwrap());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn corrupted_override_fails_verification() {
    let dir = scratch_dir("corrupt");
    // Bump one multiplicity: the per-spin state counts stop adding up.
    let corrupted = EMBEDDED.replacen(
        "\"multiplicities\": [1, 0, 0, 0, 0, 0, 1, 0, 0]",
        "\"multiplicities\": [2, 0, 0, 0, 0, 0, 1, 0, 0]",
        1,
    );
    assert_ne!(corrupted, EMBEDDED);
    std::fs::write(dir.join(TABLE_FILE), &corrupted).unwrap();
    assert!(GoldenTable::load_from_dir(&dir).is_err());

    let out = Command::new(env!("CARGO_BIN_EXE_repchar"))
        .arg("verify")
        .env("REPCHAR_GOLDEN_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["all_passed"], false);
    let golden = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "golden-table")
        .unwrap();
    assert_eq!(golden["passed"], false);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn missing_override_is_an_error() {
    let dir = scratch_dir("empty");
    assert!(GoldenTable::load_from_dir(&dir).is_err());
    std::fs::remove_dir_all(dir).unwrap();
}
