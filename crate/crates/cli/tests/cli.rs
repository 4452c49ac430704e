//! End-to-end runs of the `secant` binary.

use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_secant")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8"))
}

fn run_json(args: &[&str]) -> Value {
    let mut v = args.to_vec();
    v.push("--json");
    let (code, out) = run(&v);
    assert_eq!(code, 0, "{args:?}: {out}");
    serde_json::from_str(&out).expect("valid JSON")
}

#[test]
fn pfaffian_is_the_only_cubic_on_the_secant_of_g26() {
    let v = run_json(&["ideal", "--k", "2", "--n", "6", "--s", "2", "--d", "3"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["dimension"], 1);
    assert_eq!(v["ambient_dimension"], 680);
    assert_eq!(v["status"], "pass");
}

#[test]
fn json_is_byte_identical_across_runs_and_thread_counts() {
    let args = ["verify", "identities", "--family", "A:2,5", "--family", "D:5", "--samples", "20", "--json"];
    let (_, a) = run(&args);
    let (_, b) = run(&args);
    let mut more = args.to_vec();
    more.extend(["--jobs", "1"]);
    let (_, c) = run(&more[..]);
    assert_eq!(a, b);
    // the command echo differs, everything else must not
    let strip = |s: &str| {
        let mut v: Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().remove("command");
        v
    };
    assert_eq!(strip(&a), strip(&c));
    let ideal = ["ideal", "--k", "2", "--n", "7", "--d", "3", "--json", "--seed", "4"];
    assert_eq!(run(&ideal).1, run(&ideal).1);
}

#[test]
fn s3_wedge_table_for_k2() {
    let v = run_json(&["plethysm", "s3-wedge", "--k", "2", "--dim", "6"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r["agree"] == true));
    assert_eq!(v["dimension"]["s3"], "680");
}

#[test]
fn verification_suites_pass() {
    for args in [
        &["verify", "secant-lemmas", "--family", "A:2,5"][..],
        &["verify", "tangent", "--family", "A:2,5", "--family", "D:5"],
        &["verify", "main-theorem", "--family", "A:2,6", "--samples", "5"],
        &["verify", "pfaffian-pluecker", "--n", "7", "--first-chart"],
        &["hwv", "--k", "3", "--check"],
        &["orbit-ring", "--k", "2", "--alpha", "3,2,1,0"],
        &["cubics", "--k", "2", "--n", "7", "--compute"],
        &["cumulant", "show", "--family", "D:4", "--coords", "y"],
    ] {
        let v = run_json(args);
        assert_eq!(v["status"], "pass", "{args:?}");
        assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] != "fail"), "{args:?}");
    }
}

#[test]
fn pfaffian_pluecker_case_counts() {
    let v = run_json(&["verify", "pfaffian-pluecker", "--n", "7", "--first-chart"]);
    assert_eq!(v["cases"].as_array().unwrap().len(), 5);
    let v = run_json(&["verify", "pfaffian-pluecker", "--n", "6", "--first-chart"]);
    assert_eq!(v["cases"].as_array().unwrap().len(), 1);
    // every chart x_ij = 1 of G(2,6)
    let v = run_json(&["verify", "pfaffian-pluecker", "--n", "6"]);
    assert_eq!(v["cases"].as_array().unwrap().len(), 15);
}

#[test]
fn flagged_is_not_failed() {
    let (code, out) = run(&["cubics", "--k", "2", "--n", "6"]);
    assert_eq!(code, 0);
    assert!(out.contains("1 flagged"), "{out}");
}

#[test]
fn usage_and_precondition_errors_exit_nonzero() {
    assert_eq!(run(&["ideal", "--k", "2"]).0, 2);
    assert_eq!(run(&["verify", "identities", "--family", "E7"]).0, 2);
    assert_eq!(run(&["verify", "identities", "--family", "A:2,4", "--bogus"]).0, 2);
    assert_eq!(run(&["hwv", "--k", "5"]).0, 2);
    assert_eq!(run(&["orbit-ring", "--k", "2", "--alpha", "0,1,2,3"]).0, 2);
    assert_eq!(run(&["verify", "main-theorem", "--family", "D:5"]).0, 2);
}

#[test]
fn text_output_without_json() {
    let (code, out) = run(&["hwv", "--k", "2", "--check"]);
    assert_eq!(code, 0);
    assert!(out.contains("P(Q) = 8"));
    assert!(out.lines().last().unwrap().starts_with("PASS"));
}
