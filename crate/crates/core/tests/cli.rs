use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forge")).args(args).env_remove("FORGE_CACHE_DIR").output().expect("forge runs")
}

#[test]
fn list_prints_every_check() {
    let out = forge(&["list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let ids: Vec<&str> = text.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(ids.len(), forge::verify::registry().len());
    assert!(ids.contains(&"spin.orbits"));
    assert!(ids.contains(&"table1.sp62.dims"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(forge(&["check", "no.such.check"]).status.code(), Some(2));
    assert_eq!(forge(&["check"]).status.code(), Some(2));
    assert_eq!(forge(&["check", "--jobs", "many", "--all"]).status.code(), Some(2));
    assert_eq!(forge(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn check_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("out/report.json");
    let md = dir.path().join("report.md");
    let out =
        forge(&["check", "spin.orbits", "--json", json.to_str().unwrap(), "--md", md.to_str().unwrap(), "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let report: Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    let rows = report.as_array().unwrap();
    let ids: Vec<&str> = rows.iter().map(|r| r["check_id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"spin.module"), "dependencies run too");
    let spin = rows.iter().find(|r| r["check_id"] == "spin.orbits").unwrap();
    let mut keys: Vec<&str> = spin.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(keys, ["check_id", "claim", "computed", "expected", "paper_ref", "runtime_ms", "status"]);
    assert_eq!(spin["status"], "pass");
    assert_eq!(spin["computed"], serde_json::json!([135, 120]));

    let md = fs::read_to_string(&md).unwrap();
    assert!(md.contains("| `spin.orbits` | pass |"));
    assert!(md.contains("## Lemma sp62spin"));
}

#[test]
fn cache_directory_from_flag_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let out = forge(&["check", "go4p.order", "--cache-dir", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert!(dir.path().join("GO4p_3.bsgs").exists());

    let env_dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_forge"))
        .args(["check", "go4m.order"])
        .env("FORGE_CACHE_DIR", env_dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(env_dir.path().join("GO4m_3.bsgs").exists());

    // a second run reads the cache and agrees
    let again = forge(&["check", "go4p.order", "--cache-dir", dir.path().to_str().unwrap()]);
    assert!(again.status.success());
}
