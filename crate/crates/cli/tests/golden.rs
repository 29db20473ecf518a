//! Byte-exact golden reports. Set `GMR_BLESS=1` to rewrite them.

use std::path::PathBuf;
use std::process::Command;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn golden(name: &str, args: &[&str], exit: i32) {
    let args: Vec<String> = args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(rel) => root().join(rel).to_string_lossy().into_owned(),
            None => a.to_string(),
        })
        .collect();
    let out = Command::new(env!("CARGO_BIN_EXE_gmr")).args(&args).output().unwrap();
    assert_eq!(out.status.code(), Some(exit), "{name}: {}", String::from_utf8_lossy(&out.stdout));
    let path = root().join("tests/golden").join(name);
    if std::env::var_os("GMR_BLESS").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
        return;
    }
    let want = std::fs::read(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    if want != out.stdout {
        panic!(
            "{name} differs from golden\n--- expected\n{}\n--- actual\n{}",
            String::from_utf8_lossy(&want),
            String::from_utf8_lossy(&out.stdout)
        );
    }
}

#[test]
fn check_z4() {
    golden("check_z4.txt", &["check", "@corpus/z4.json"], 0);
}

#[test]
fn check_corrupted() {
    golden("check_corrupted_z4.txt", &["check", "@tests/fixtures/corrupted_z4.json"], 1);
}

#[test]
fn radical_all_z4_text() {
    golden("radical_all_z4.txt", &["radical", "@corpus/z4.json", "--method", "all"], 0);
}

#[test]
fn radical_all_z4_json() {
    golden("radical_all_z4.json", &["radical", "@corpus/z4.json", "--method", "all", "--format", "json"], 0);
}

#[test]
fn radical_single_method() {
    golden("radical_m_z12.txt", &["radical", "@corpus/z12.json", "--method", "m"], 0);
}

#[test]
fn verify_radical_upper() {
    golden("verify_radical_upper2.txt", &["verify", "@corpus/upper2_mod2.json", "--suite", "radical"], 0);
}

#[test]
fn verify_all_full_matrix_json() {
    golden("verify_all_full2_mod2.json", &["verify", "@corpus/full2_mod2.json", "--format", "json"], 0);
}

#[test]
fn components_cycle() {
    golden("components_cycle2_L2.txt", &["components", "@corpus/cycle2_L2.json"], 0);
}

#[test]
fn ideals_ring_flavor() {
    golden("ideals_z12_ring.txt", &["ideals", "@corpus/z12.json", "--flavor", "ring"], 0);
}

#[test]
fn quotient_by_named_ideal() {
    golden("quotient_z8_four.txt", &["quotient", "@corpus/z8.json", "--ideal", "four"], 0);
}

#[test]
fn invalid_spec_diagnostic() {
    golden("check_undeclared_vertex.txt", &["check", "@tests/fixtures/undeclared_vertex.json"], 2);
}

#[test]
fn resource_limit_report() {
    golden("check_oversized.json", &["check", "@tests/fixtures/oversized.json", "--format", "json"], 3);
}
