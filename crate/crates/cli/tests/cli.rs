//! End-to-end tests driving the compiled `irred` binary.

use std::process::{Command, Output};

fn irred(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_irred"))
        .args(args)
        .output()
        .expect("the irred binary must run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn classify_json_matches_contract_and_round_trips() {
    let out = irred(&[
        "classify", "--p", "2", "--lambda", "4,3,1", "--subgroup", "point-stabilizer", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let line = text.trim_end();
    let value: serde_json::Value = serde_json::from_str(line).expect("output is JSON");
    assert_eq!(value["outcome"], "irreducible");
    assert_eq!(value["clause"], "Theorem B(b)");
    assert_eq!(
        value.to_string(),
        line,
        "parsing and re-serializing must be byte-identical"
    );
}

#[test]
fn classify_text_mode_prints_evidence() {
    let out = irred(&["classify", "--p", "2", "--lambda", "4,3,1", "--subgroup", "intransitive:7,1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("outcome: irreducible"), "got: {text}");
    assert!(text.contains("normal nodes: (1,4) (2,3)"), "got: {text}");
}

#[test]
fn strict_flag_reports_reducible_with_exit_one() {
    let relaxed = irred(&["classify", "--p", "2", "--lambda", "5,4", "--subgroup", "point-stabilizer"]);
    assert_eq!(relaxed.status.code(), Some(0));
    assert!(stdout(&relaxed).contains("outcome: reducible"));
    let strict = irred(&[
        "classify", "--p", "2", "--lambda", "5,4", "--subgroup", "point-stabilizer", "--strict",
    ]);
    assert_eq!(strict.status.code(), Some(1), "strict reducible verdicts exit 1");
}

#[test]
fn mullineux_example() {
    let out = irred(&["mullineux", "--p", "3", "--lambda", "2,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "3");
}

#[test]
fn jstrunc_example() {
    let out = irred(&["jstrunc", "--lambda", "5,4,2,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "5,3,1");
}

#[test]
fn enumerate_splitting_golden() {
    let out = irred(&["enumerate", "--p", "2", "--n", "8", "--splitting"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 2, "got: {lines:?}");
    assert!(lines.contains(&"5,3".to_string()) && lines.contains(&"4,3,1".to_string()));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["classify", "--p", "4", "--lambda", "4,3,1", "--subgroup", "full"][..],
        &["classify", "--p", "2", "--lambda", "3,5", "--subgroup", "full"],
        &["classify", "--p", "2", "--lambda", "4,3,1", "--subgroup", "wreath:4x3"],
        &["classify", "--p", "2", "--lambda", "4,3,1", "--subgroup", "nonsense"],
        &["mullineux", "--p", "2", "--lambda", "2,2,2"],
        &["reachable", "--p", "2", "--lambda", "4,3", "--m", "9"],
        &["verify", "no-such-suite"],
    ] {
        let out = irred(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}: stderr {}", stderr(&out));
        assert!(stderr(&out).contains("error"), "args {args:?} must explain the failure");
    }
}

#[test]
fn verify_reports_and_registry() {
    let out = irred(&["verify", "js-parity", "--max-n", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("suite: js-parity"), "got: {text}");
    assert!(text.contains("overall: pass"), "got: {text}");

    let strict = irred(&["verify", "l1", "--max-n", "14", "--strict"]);
    assert_eq!(strict.status.code(), Some(0), "a passing suite exits 0 even under --strict");

    let listing = irred(&["verify"]);
    assert_eq!(listing.status.code(), Some(0));
    let text = stdout(&listing);
    for name in ["js-parity", "mullineux-involution", "small-table"] {
        assert!(text.contains(name), "registry listing must mention {name}");
    }
}

#[test]
fn verify_json_round_trips_and_dumps_to_file() {
    let path = std::env::temp_dir().join(format!("irred-report-{}.json", std::process::id()));
    let path_str = path.to_str().expect("temp path is UTF-8");
    let out = irred(&["verify", "js-parity", "--max-n", "10", "--json", "--out", path_str]);
    assert_eq!(out.status.code(), Some(0));
    let line = stdout(&out);
    let line = line.trim_end();
    let value: serde_json::Value = serde_json::from_str(line).expect("report is JSON");
    assert_eq!(value["suite"], "js-parity");
    assert_eq!(value["failures"], serde_json::json!([]));
    assert_eq!(value.to_string(), line, "canonical key order must round-trip");
    let dumped = std::fs::read_to_string(&path).expect("report file written");
    assert_eq!(dumped.trim_end(), line, "file dump matches stdout");
    std::fs::remove_file(&path).ok();
}

#[test]
fn reachable_membership_and_witness() {
    let out = irred(&["reachable", "--p", "2", "--lambda", "4,3,1", "--m", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l == "4,2"), "got: {}", stdout(&out));

    let hit = irred(&["reachable", "--p", "2", "--lambda", "4,3,1", "--m", "6", "--target", "4,2"]);
    assert_eq!(hit.status.code(), Some(0));
    let text = stdout(&hit);
    assert!(text.contains("reachable: true"), "got: {text}");
    assert_eq!(text.matches("remove ").count(), 2, "two removal steps from size 8 to 6");

    let miss = irred(&[
        "reachable", "--p", "2", "--lambda", "4,3,1", "--m", "6", "--target", "6", "--strict",
    ]);
    assert_eq!(miss.status.code(), Some(1));
    assert!(stdout(&miss).contains("reachable: false"));
}

#[test]
fn invariants_modes() {
    let single =
        irred(&["invariants", "--p", "3", "--n", "5", "--subgroup", "intransitive:3,2", "--module", "s2star"]);
    assert_eq!(single.status.code(), Some(0));
    assert_eq!(stdout(&single).trim(), "2");

    let survey = irred(&["invariants", "--p", "2", "--n", "8", "--subgroup", "intransitive:6,2"]);
    assert_eq!(survey.status.code(), Some(0));
    let text = stdout(&survey);
    assert!(text.contains("s1star: 1"), "got: {text}");
    assert!(text.contains("s2star: 1"), "got: {text}");
    assert!(text.contains("m2: 3"), "orbit count on pairs appears as m2: {text}");
}

#[test]
fn thread_count_does_not_change_output() {
    let one = irred(&["--threads", "1", "verify", "ljs-properties", "--max-n", "12", "--json"]);
    let many = irred(&["--threads", "3", "verify", "ljs-properties", "--max-n", "12", "--json"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(many.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&many), "reports must not depend on parallelism");
}
