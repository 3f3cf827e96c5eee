//! End-to-end tests driving the installed binary.

use std::process::{Command, Output};

fn harmonics(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_harmonics"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn expand_sigma_prints_exact_series() {
    let out = harmonics(&["expand", "sigma"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("sigma = sum("), "{text}");
    assert!(text.contains("-1/3"), "{text}");
    assert!(text.contains("-2/945"), "{text}");
}

#[test]
fn expand_json_is_stable_across_runs() {
    let a = harmonics(&["expand", "ball", "--order", "4", "--json"]);
    let b = harmonics(&["expand", "ball", "--order", "4", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let parsed: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(parsed["order"], 4);
    assert_eq!(parsed["series"].as_array().unwrap().len(), 3);
}

#[test]
fn expand_rejects_out_of_range_order() {
    let out = harmonics(&["expand", "sigma", "--order", "99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let out = harmonics(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_space_spec_is_usage_error() {
    let out = harmonics(&["space", "dr:q=5,p=1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_model_space_passes() {
    let out = harmonics(&["verify", "dr:q=1,p=1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("result: pass"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn verify_corrupted_tensor_fails_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.tensor");
    let out = harmonics(&[
        "space",
        "form:n=4,k=1",
        "--dump-tensor",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    // break a curvature symmetry in place
    let mut text = std::fs::read_to_string(&path).unwrap();
    text.push_str("0 1 0 1 3.5e0\n");
    std::fs::write(&path, text).unwrap();
    let out = harmonics(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn tensor_dump_roundtrips_through_space_command() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dr12.tensor");
    let dumped = harmonics(&[
        "space",
        "dr:q=3,p=1,m=1",
        "--dump-tensor",
        path.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(dumped.status.code(), Some(0));
    let reread = harmonics(&["space", path.to_str().unwrap(), "--json"]);
    assert_eq!(reread.status.code(), Some(0));
    let a: serde_json::Value = serde_json::from_slice(&dumped.stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&reread.stdout).unwrap();
    // identical invariants; only the label differs
    assert_eq!(a["invariants"], b["invariants"]);
    assert_eq!(a["invariants"]["n"], 12);
}

#[test]
fn compare_reports_nabla_mismatch_for_dim12_pair() {
    let out = harmonics(&["compare", "dr:q=3,p=2,m=0", "dr:q=3,p=1,m=1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("verdict: nablaR-mismatch"), "{text}");
}

#[test]
fn compare_space_form_with_itself_is_indistinguishable() {
    let out = harmonics(&["compare", "form:n=6,k=-1", "form:n=6,k=-1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["compare"]["verdict"], "indistinguishable-at-this-order");
}

#[test]
fn compare_detects_dimension_and_chl_mismatches() {
    let out = harmonics(&["compare", "flat:n=4", "flat:n=6", "--json"]);
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["compare"]["verdict"], "dimension-mismatch");

    let out = harmonics(&["compare", "form:n=6,k=1", "form:n=6,k=-1", "--json"]);
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["compare"]["verdict"], "CHL-mismatch");
}

#[test]
fn verify_json_is_deterministic_for_fixed_seed() {
    let a = harmonics(&["verify", "form:n=4,k=-1", "--seed", "7", "--json"]);
    let b = harmonics(&["verify", "form:n=4,k=-1", "--seed", "7", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
