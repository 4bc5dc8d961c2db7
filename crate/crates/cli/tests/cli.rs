use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn idealtop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idealtop")).args(args).env_remove("IDEALTOP_WORKERS").output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const SIERPINSKI_M1: &str = r#"{"topology": {"n": 2, "opens": [[1]]}, "ideal": {"carrier": [1]}}"#;

#[test]
fn star_operators() {
    let dir = tempfile::tempdir().unwrap();
    let s = write(dir.path(), "s.json", SIERPINSKI_M1);
    let out = idealtop(&["star", &s, "local", "{0}"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "{0}");

    let plain = write(dir.path(), "p.json", r#"{"topology": {"n": 2, "opens": [[1]]}, "ideal": {"carrier": []}}"#);
    let out = idealtop(&["star", &plain, "tau_star"]);
    assert_eq!(stdout(&out).trim(), "[{}, {1}, {0,1}]");

    let out = idealtop(&["star", &s, "compat"]);
    assert_eq!(stdout(&out).trim(), "true");
}

#[test]
fn star_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"topology": {"n": 3, "opens": [[0], [1]]}, "ideal": {"carrier": []}}"#);
    let out = idealtop(&["star", &bad, "psi", "0"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("topology"));

    let s = write(dir.path(), "s.json", SIERPINSKI_M1);
    assert_eq!(code(&idealtop(&["star", &s, "local", "{5}"])), 2);
    assert_eq!(code(&idealtop(&["star", &s, "local"])), 2);
    assert_eq!(code(&idealtop(&["star", "/nonexistent.json", "local", "0"])), 2);
}

#[test]
fn labels_pass_through() {
    let dir = tempfile::tempdir().unwrap();
    let s = write(dir.path(), "s.json", r#"{"topology": {"n": 2, "opens": [[1]], "labels": ["a", "b"]}, "ideal": {"carrier": []}}"#);
    let out = idealtop(&["star", &s, "tau_star", "--json", "-"]);
    let json: Value = serde_json::from_str(stdout(&out).split_once('\n').unwrap().1).unwrap();
    assert_eq!(json["labels"], serde_json::json!(["a", "b"]));
}

const IDENTITY: &str = r#"{
    "X": {"topology": {"n": 2, "opens": [[1]]}, "ideal": {"carrier": []}},
    "Y": {"topology": {"n": 2, "opens": [[1]]}, "ideal": {"carrier": []}},
    "f": {"n_dom": 2, "n_cod": 2, "values": [0, 1]}
}"#;

#[test]
fn check_identity_all() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "id.json", IDENTITY);
    let json = dir.path().join("v.json");
    let out = idealtop(&["check", &inst, "all", "--json", json.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let verdicts: Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(verdicts.as_array().unwrap().len(), 13);
}

#[test]
fn check_reports_violations_and_unknown_ids() {
    let dir = tempfile::tempdir().unwrap();
    // HR34's hypotheses hold here but its conclusion fails.
    let hr34 = write(
        dir.path(),
        "hr34.json",
        r#"{"X": {"topology": {"n": 1}, "ideal": {"carrier": []}},
            "Y": {"topology": {"n": 2, "opens": [[0], [1]]}, "ideal": {"carrier": [0]}},
            "f": {"n_dom": 1, "n_cod": 2, "values": [1]}}"#,
    );
    let out = idealtop(&["check", &hr34, "HR34"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("VIOLATED"));

    let inst = write(dir.path(), "id.json", IDENTITY);
    assert_eq!(code(&idealtop(&["check", &inst, "TC9"])), 2);
}

#[test]
fn check_construction_instance_shows_the_failing_conclusion() {
    let dir = tempfile::tempdir().unwrap();
    let demo = idealtop(&["demo", "add-open-point", "--json", dir.path().join("d.json").to_str().unwrap()]);
    assert_eq!(code(&demo), 0);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("d.json")).unwrap()).unwrap();
    let inst = write(dir.path(), "inst.json", &report["instance"].to_string());

    let json = dir.path().join("v.json");
    let out = idealtop(&["check", &inst, "CONTPSI", "--json", json.to_str().unwrap()]);
    // Surjectivity fails, so this is not a violation of the theorem itself.
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(v[0]["conclusions"]["a"], false);
    assert_eq!(v[0]["hypotheses"]["surjective"], false);
    assert_eq!(v[0]["witness"]["subset"], serde_json::json!([]));
    assert!(stdout(&out).contains("a=false"));
}

#[test]
fn search_exit_codes() {
    assert_eq!(code(&idealtop(&["search", "TC1", "--max-n", "2"])), 0);
    let out = idealtop(&["search", "CONTPSI", "--drop", "surjective", "--max-n", "3"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("counterexample"));
    let out = idealtop(&["search", "TC1", "--max-n", "9"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    assert_eq!(code(&idealtop(&["search", "TC1", "--drop", "nonsense"])), 2);
    assert_eq!(code(&idealtop(&["search", "TC1", "--samples", "10"])), 2);
}

#[test]
fn search_output_ignores_worker_count() {
    let run = |w: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_idealtop"))
            .args(["search", "OPENBIJ", "--drop", "surjective", "--json", "-"])
            .env("IDEALTOP_WORKERS", w)
            .output()
            .unwrap();
        assert_eq!(code(&out), 1);
        stdout(&out)
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn sampled_search_is_reproducible() {
    let args = ["search", "TC2", "--samples", "500", "--seed", "11", "--json", "-"];
    let a = stdout(&idealtop(&args));
    assert_eq!(a, stdout(&idealtop(&args)));
    assert!(a.contains("\"mode\": \"sampled\""));
}

#[test]
fn demos() {
    for name in ["add-open-point", "add-generic-point", "collapse-cont", "pstar-trivial"] {
        let out = idealtop(&["demo", name]);
        assert_eq!(code(&out), 0, "{name}: {}", stdout(&out));
        assert!(stdout(&out).contains("prediction confirmed"));
    }
    assert_eq!(code(&idealtop(&["demo", "no-such-demo"])), 2);
}

#[test]
fn collapse_open_demo_follows_the_exit_contract() {
    let out = idealtop(&["demo", "collapse-open"]);
    let confirmed = stdout(&out).contains("prediction confirmed");
    assert_eq!(code(&out), if confirmed { 0 } else { 1 });
}

#[test]
fn enumerate() {
    let count = |what: &str, n: &str| stdout(&idealtop(&["enumerate", "--what", what, "--n", n, "--count-only"]));
    assert_eq!(count("topologies", "3").trim(), "29");
    assert_eq!(count("ideals", "3").trim(), "8");
    assert_eq!(count("maps", "3").trim(), "27");
    let out = idealtop(&["enumerate", "--what", "topologies", "--n", "2"]);
    let first: Value = serde_json::from_str(stdout(&out).lines().next().unwrap()).unwrap();
    assert_eq!(first["n"], 2);
    assert_eq!(code(&idealtop(&["enumerate", "--what", "topologies", "--n", "7"])), 2);
}
