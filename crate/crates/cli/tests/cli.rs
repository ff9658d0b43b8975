use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn relce(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relce"))
        .args(args)
        .env_remove("RELCE_SCAN_CAP")
        .output()
        .expect("run relce")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn rightmost_without_trace_omits_it() {
    let out = relce(&["rightmost", "--tree", fixture("tree_depth2.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["X"], "10");
    assert!(v.get("trace").is_none());
}

#[test]
fn rightmost_generator_with_seed_override() {
    let dir = tempfile::tempdir().unwrap();
    let tree = write(
        dir.path(),
        "gen.json",
        r#"{"gen":"random","depth":9,"seed":1,"density":0.05}"#,
    );
    let tree = tree.to_str().unwrap();
    let a = relce(&["rightmost", "--tree", tree, "--seed", "42"]);
    let b = relce(&["rightmost", "--tree", tree, "--seed", "42"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["oracle_agrees"], true);
}

#[test]
fn invalid_tree_lists_violations() {
    let dir = tempfile::tempdir().unwrap();
    let tree = write(dir.path(), "t.json", r#"{"depth":1,"nodes":["","01"]}"#);
    let out = relce(&["rightmost", "--tree", tree.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "invalid-tree");
    let kinds: Vec<&str> = v["error"]["details"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["kind"].as_str().unwrap())
        .collect();
    assert!(kinds.contains(&"not-prefix-closed"));
}

#[test]
fn malformed_and_schema_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(dir.path(), "broken.json", "{ not json");
    let out = relce(&["demo3", "--sigma", "1000", "--l", "1", "--op", broken.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["error"]["kind"], "malformed-json");

    let wrong = write(dir.path(), "wrong.json", r#"{"axioms": [[1, "x"]]}"#);
    let out = relce(&["demo3", "--sigma", "1000", "--l", "1", "--op", wrong.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["error"]["kind"], "schema");

    let missing = relce(&["demo3", "--sigma", "1000", "--l", "1", "--op", "/no/such/file"]);
    assert_eq!(code(&missing), 2);
}

#[test]
fn usage_errors_exit_2() {
    let out = relce(&["fixpoint", "--sigma", "0000", "--p", "1", "--frobnicate"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["error"]["kind"], "usage");
    let out = relce(&["fixpoint", "--sigma", "01a", "--p", "1"]);
    assert_eq!(code(&out), 2);
    let out = relce(&["verify"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn fixpoint_precondition_diagnostic() {
    let out = relce(&["fixpoint", "--sigma", "10", "--p", "1"]);
    assert_eq!(code(&out), 2);
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "precondition-violated");
    assert_eq!(v["error"]["details"]["j_sigma0"], "01");
}

#[test]
fn demo3_no_candidate_exits_1() {
    let op = fixture("op_2_1.json");
    let out = relce(&["demo3", "--sigma", "0000", "--l", "0", "--op", op.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["no_candidate"]["z_t"], serde_json::json!([]));
}

#[test]
fn force_and_its_verification() {
    let dir = tempfile::tempdir().unwrap();
    let reqs = fixture("requirements.json");
    let report = dir.path().join("force.json");
    let out = relce(&[
        "force",
        "--requirements",
        reqs.to_str().unwrap(),
        "--t",
        "3",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["sigma"], "110");
    assert_eq!(v["log"][2]["outcome"], "avoided-within-bound");

    let out = relce(&[
        "verify",
        "--report",
        report.to_str().unwrap(),
        "--requirements",
        reqs.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn scan_cap_from_flag_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let reqs = write(dir.path(), "r.json", r#"[{"id":0,"danger":{"axioms":[[0,[1]]]}}]"#);
    let reqs = reqs.to_str().unwrap();
    let out = relce(&["force", "--requirements", reqs, "--t", "6", "--scan-cap", "32"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["error"]["kind"], "scan-cap-exceeded");

    let run_env = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_relce"))
            .args(["force", "--requirements", reqs, "--t", "6"])
            .env("RELCE_SCAN_CAP", cap)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run_env("32")), 2);
    assert_eq!(code(&run_env("64")), 0);
    assert_eq!(code(&run_env("lots")), 2);
}

#[test]
fn verify_witness_mode() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(dir.path(), "c.json", r#"{"axioms":[[1,[0]]]}"#);
    let c = c.to_str().unwrap();
    let out = relce(&["verify", "--witness", c, "--x", "10"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["holds"], true);
    let out = relce(&["verify", "--witness", c, "--x", "00"]);
    assert_eq!(code(&out), 1);
    assert_eq!(
        json(&out)["failures"],
        serde_json::json!([{"m": 0, "kind": "missing-axiom"}, {"m": 1, "kind": "missing-axiom"}])
    );
}

#[test]
fn verify_avoidance_mode() {
    let op = fixture("op_2_1.json");
    let op = op.to_str().unwrap();
    let out = relce(&["verify", "--op", op, "--sigma", "1000", "--l", "1"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["result"], "counterexample");
    let out = relce(&["verify", "--op", op, "--sigma", "0000", "--l", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["result"], "holds");
}

#[test]
fn verify_rejects_tampered_reports() {
    let dir = tempfile::tempdir().unwrap();
    let tree = fixture("tree_depth2.json");
    let tampered = write(
        dir.path(),
        "r.json",
        r#"{"X":"01","C":[[0,[]]],"oracle_agrees":true,"witness_holds":true}"#,
    );
    let out = relce(&[
        "verify",
        "--report",
        tampered.to_str().unwrap(),
        "--tree",
        tree.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["verified"], false);

    let fx = write(
        dir.path(),
        "f.json",
        r#"{"sigma0":"10","p":1,"sigma":"11","j_preserved":true}"#,
    );
    let out = relce(&["verify", "--report", fx.to_str().unwrap()]);
    assert_eq!(code(&out), 1);

    let out = relce(&["verify", "--report", tampered.to_str().unwrap()]);
    assert_eq!(code(&out), 2, "missing --tree is a usage error");
}
