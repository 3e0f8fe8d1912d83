use std::path::Path;
use std::process::{Command, Output};

fn uncover(args: &[&str], dir: &Path, seed_env: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_uncover"));
    cmd.args(args).current_dir(dir).env_remove("UNCOVER_SEED");
    if let Some(s) = seed_env {
        cmd.env("UNCOVER_SEED", s);
    }
    cmd.output().unwrap()
}

fn ok(out: Output) -> String {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn env_seed_overrides_flag() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    ok(uncover(&["generate", "--family", "thm22", "--n", "8", "--out", "i.json"], p, None));
    let run = |seed: &str, env| ok(uncover(&["run", "--instance", "i.json", "--alg", "disjoint", "--trials", "30", "--seed", seed], p, env));
    assert_eq!(run("1", Some("9")), run("9", None));
    assert_ne!(run("1", None), run("9", None));
    let bad = uncover(&["run", "--instance", "i.json", "--alg", "disjoint"], p, Some("x"));
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn fig1_opt_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    ok(uncover(&["generate", "--family", "fig1", "--out", "f.json", "--realization-out", "fr.json"], p, None));
    let opt: serde_json::Value = serde_json::from_str(&ok(uncover(&["opt", "--instance", "f.json", "--realization", "fr.json"], p, None))).unwrap();
    assert_eq!(opt["opt_size"], 4);
    assert_eq!(opt["opt_set"], serde_json::json!([0, 1, 4, 6]));
    let t: serde_json::Value =
        serde_json::from_str(&ok(uncover(&["trace", "--instance", "f.json", "--realization", "fr.json", "--alg", "minset"], p, None))).unwrap();
    assert_eq!(t["algorithm"], "minset");
    assert!(!t["queries"].as_array().unwrap().is_empty());
}

#[test]
fn csv_output_has_a_row_per_pair() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    ok(uncover(&["generate", "--family", "fig1", "--out", "f.json"], p, None));
    ok(uncover(&["generate", "--family", "random-minset", "--seed", "3", "--out", "g.json"], p, None));
    ok(uncover(
        &["run", "--instance", "f.json", "--instance", "g.json", "--alg", "minset", "--alg", "baseline:all", "--trials", "5", "--out", "r.csv"],
        p,
        None,
    ));
    let csv = std::fs::read_to_string(p.join("r.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "algorithm,trials,mean_alg,ci_lo,ci_hi,mean_opt,ratio,grsetu,verify_pass_rate");
    assert_eq!(lines.len(), 5);
}

#[test]
fn errors_exit_with_two_and_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    std::fs::write(p.join("bad.json"), r#"{"kind":"minset","intervals":[{"lower":"0","upper":"1/0"}],"sets":[[0]]}"#).unwrap();
    let out = uncover(&["run", "--instance", "bad.json", "--alg", "minset"], p, None);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("intervals[0].upper"), "{err}");
    let out = uncover(&["run", "--instance", "missing.json", "--alg", "minset"], p, None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.json"));
    let out = uncover(&["run", "--instance", "bad.json", "--alg", "fastest"], p, None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_each_check() {
    let dir = tempfile::tempdir().unwrap();
    let out = uncover(&["verify", "--suite", "lb22", "--suite", "equivalence", "--trials", "50"], dir.path(), None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("PASS ") || l.starts_with("FAIL ")), "{text}");
    assert!(text.contains("equivalence"), "{text}");
    assert_eq!(out.status.code(), Some(if text.contains("FAIL ") { 1 } else { 0 }));
}
