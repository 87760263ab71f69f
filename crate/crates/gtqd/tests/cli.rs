//! End-to-end checks of the gtqd binary: exit codes, output determinism,
//! and round-trips through the JSON formats.

use std::process::Command;

fn gtqd() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gtqd"))
}

#[test]
fn check_exit_codes() {
    // q = 1: exists and modular -> 0
    let out = gtqd()
        .args(["check", "--group", "z4", "--cocycle", "cyclic:1", "--central", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    // q = 2: exists, degenerate -> 2
    let out = gtqd()
        .args(["check", "--group", "z4", "--cocycle", "cyclic:2", "--central", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // malformed input -> 1
    let dir = std::env::temp_dir().join("gtqd_cli_bad");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"order\": 2, \"table\": [[0,1],[1,1]]}").unwrap();
    let out = gtqd()
        .args(["check", "--group", bad.to_str().unwrap(), "--cocycle", "trivial"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn no_certificate_is_exit_3() {
    // on Z/2 x Z/2 some classes have gamma not a coboundary: find one by
    // scanning q over the catalog of generators through the CLI h3 output
    // is overkill; use the known type-III obstruction via a cocycle file.
    // Simpler: taking A = the full Klein group with a class that fails.
    let out = gtqd()
        .args(["h3", "--group", "z2xz2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let generators = parsed["generators"].as_array().unwrap();
    assert_eq!(generators.len(), 3);
    // write each generator out and find one rejected for A = G
    let dir = std::env::temp_dir().join("gtqd_cli_gen");
    std::fs::create_dir_all(&dir).unwrap();
    let mut saw_exit3 = false;
    for (i, g) in generators.iter().enumerate() {
        let path = dir.join(format!("gen{i}.json"));
        std::fs::write(&path, serde_json::to_string(g).unwrap()).unwrap();
        let out = gtqd()
            .args([
                "check",
                "--group",
                "z2xz2",
                "--cocycle",
                path.to_str().unwrap(),
                "--central",
                "1,2",
            ])
            .output()
            .unwrap();
        if out.status.code() == Some(3) {
            let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
            assert_eq!(parsed["exists"], serde_json::Value::Bool(false));
            assert!(!parsed["reasons"].as_array().unwrap().is_empty());
            saw_exit3 = true;
        }
    }
    assert!(saw_exit3, "some Klein-four class must obstruct the full quotient");
}

#[test]
fn byte_identical_reports() {
    let run = || {
        gtqd()
            .args(["modular", "--group", "z2", "--cocycle", "trivial"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn modular_report_shape() {
    let out = gtqd()
        .args(["modular", "--group", "z2", "--cocycle", "trivial", "--dump-structure"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["rank"], 4);
    assert_eq!(parsed["modular"], true);
    assert_eq!(parsed["S"].as_array().unwrap().len(), 4);
    assert!(parsed["structure_constants"].as_array().unwrap().len() > 0);
}

#[test]
fn two_generators_report() {
    let out = gtqd().args(["two-generators", "120", "8"]).output().unwrap();
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["count"], 60);
    assert_eq!(
        parsed["orders"],
        serde_json::json!([8, 24, 40, 120])
    );
}

#[test]
fn lattice_report() {
    let out = gtqd().args(["lattice", "--gram", "[[2]]"]).output().unwrap();
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["invariant_factors"], serde_json::json!([2]));
    assert_eq!(parsed["modular"]["rank"], 2);
    assert_eq!(parsed["certificate"]["is_mtc"], true);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("gtqd_cli_out");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = gtqd()
        .args([
            "h3",
            "--group",
            "q8",
            "--out",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["invariant_factors"], serde_json::json!([8]));
}
