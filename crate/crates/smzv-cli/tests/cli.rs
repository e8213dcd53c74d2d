//! End-to-end tests of the binary: contract examples, exit codes, report
//! shapes, and the cache file.

use std::process::{Command, Output};

fn smzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smzv"))
        .args(args)
        .env_remove("SMZV_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn eval_prints_the_first_interesting_coefficient() {
    let out = smzv(&["eval", "--index", "3", "--m", "2", "--numeric", "--prec", "40"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("t^0 = 0"), "{text}");
    assert!(text.contains("-3.2469697011334145"), "-3 zeta(4): {text}");
}

#[test]
fn eval_of_the_empty_index_is_one() {
    let out = smzv(&["eval", "--index", "", "--m", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("series: 1 + O(t^1)"));
}

#[test]
fn eval_of_the_weight_seven_palindrome_vanishes() {
    let out = smzv(&["eval", "--index", "3,1,3", "--m", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("series: 0 + O(t^1)"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(smzv(&["verify", "theorem", "main9"]).status.code(), Some(2));
    assert_eq!(smzv(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(smzv(&["verify", "regshwd", "extra-id"]).status.code(), Some(2));
    assert_eq!(smzv(&["series", "nonsense"]).status.code(), Some(2));
    assert_eq!(smzv(&["eval", "--index", "0,2", "--m", "1"]).status.code(), Some(2));
    assert_eq!(smzv(&["eval", "--index", "2", "--m", "0"]).status.code(), Some(2));
    assert_eq!(smzv(&["eval"]).status.code(), Some(2), "missing --index");
}

#[test]
fn verify_word_battery_passes_and_reports() {
    let out = smzv(&["verify", "word", "wordA", "--max-n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("pass  wordA n=4"), "{text}");
    assert!(text.ends_with("verdict: pass\n"), "{text}");
}

#[test]
fn verify_json_report_is_schema_tagged() {
    let out = smzv(&["verify", "index", "I1sum", "--max-n", "2", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["schema"], "smzv-report/1");
    assert_eq!(doc["verdict"], "pass");
    assert!(doc["items"].as_array().is_some_and(|a| !a.is_empty()));
}

#[test]
fn verify_conjectures_is_informational_only() {
    let out = smzv(&["verify", "conjectures"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("info"), "{text}");
    assert!(text.contains("mod pi^2"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn series_check_passes_at_low_order() {
    let out = smzv(&["series", "lem:zeta(4^n)_gen", "--order", "5", "--prec", "40"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verdict: pass"));
}

#[test]
fn series_json_report_lists_coefficients() {
    let out = smzv(&[
        "series",
        "lem:zeta_1(2^n)_gen",
        "--order",
        "4",
        "--prec",
        "40",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["schema"], "smzv-report/1");
    assert_eq!(doc["coefficients"].as_array().map(|a| a.len()), Some(4));
}

#[test]
fn cache_file_round_trips_and_env_overrides_flag() {
    let dir = tempfile::tempdir().expect("tempdir");
    let flag_path = dir.path().join("flag.jsonl");
    let env_path = dir.path().join("env.jsonl");

    let out = Command::new(env!("CARGO_BIN_EXE_smzv"))
        .args(["eval", "--index", "2,3", "--m", "1", "--numeric", "--prec", "30"])
        .args(["--cache".as_ref(), flag_path.as_os_str()])
        .env_remove("SMZV_CACHE")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let lines = std::fs::read_to_string(&flag_path).expect("cache written");
    assert!(lines.lines().count() >= 2, "zeta(3) and zeta(2,3) at least: {lines}");
    assert!(lines.lines().all(|l| {
        let v: serde_json::Value = serde_json::from_str(l).expect("json line");
        v["index"].is_array() && v["digits"].is_number() && v["value"].is_string()
    }));

    // same run with SMZV_CACHE set: the flag path must be left untouched
    let out = Command::new(env!("CARGO_BIN_EXE_smzv"))
        .args(["eval", "--index", "2,3", "--m", "1", "--numeric", "--prec", "30"])
        .args(["--cache".as_ref(), flag_path.as_os_str()])
        .env("SMZV_CACHE", &env_path)
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert!(env_path.exists(), "env cache written");
    assert_eq!(
        std::fs::read_to_string(&flag_path).expect("still readable"),
        lines,
        "flag cache untouched when the env var overrides it"
    );
}

#[test]
fn verify_accepts_a_custom_tolerance_and_seed() {
    let out = smzv(&[
        "verify",
        "intro-t2-coefficient",
        "--prec",
        "40",
        "--tol",
        "1e-25",
        "--seed",
        "7",
    ]);
    assert!(out.status.success());
    let out = smzv(&["verify", "word", "wordA", "--tol", "not-a-number"]);
    assert_eq!(out.status.code(), Some(2));
}
