use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn grouplab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grouplab"))
        .args(args)
        .env_remove("GROUPLAB_MAX_COSETS")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write_catalog(dir: &Path) {
    let files = [
        (
            "d4.json",
            r#"{"name": "D4", "kind": "builtin", "data": {"family": "dihedral", "n": 4}}"#,
        ),
        (
            "q8.json",
            r#"{"name": "Q8", "kind": "builtin", "data": {"family": "quaternion8"}}"#,
        ),
        (
            "s3.json",
            r#"{"name": "S3", "kind": "perm", "data": {"generators": [[1, 0, 2], [2, 1, 0]]}}"#,
        ),
        (
            "c2.json",
            r#"{"name": "C2", "kind": "cayley", "data": {"table": [[0, 1], [1, 0]]}}"#,
        ),
        (
            "c4.json",
            r#"{"name": "C4", "kind": "builtin", "data": {"family": "cyclic", "n": 4}}"#,
        ),
    ];
    for (name, text) in files {
        fs::write(dir.join(name), text).unwrap();
    }
}

#[test]
fn compute_single_group_json() {
    let o = grouplab(&["compute", "builtin:dihedral:3", "--format", "json", "--oracle"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["order"], 6);
    assert_eq!(v["curly"]["order"], 3);
    assert_eq!(v["b0_invariants"], serde_json::json!([]));
    assert_eq!(v["multiplier_order"], 1);
    assert_eq!(v["oracle"]["multiplier_order"], 1);
    assert_eq!(v["config_hash"].as_str().unwrap().len(), 64);
}

#[test]
fn writes_report_files() {
    let out = tempfile::tempdir().unwrap();
    let o = grouplab(&["compute", "builtin:quaternion8", "--out", out.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(out.path().join("Q8.report.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["derived_order"], 2);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&grouplab(&["compute", "builtin:nosuch:3"])), 1);
    assert_eq!(code(&grouplab(&["compute", "/nonexistent/file.json"])), 1);
    assert_eq!(code(&grouplab(&["frobnicate"])), 1);
    assert_eq!(code(&grouplab(&["--help"])), 0);
    // The curly square of S4 has 12 elements.
    let o = grouplab(&["compute", "builtin:symmetric:4", "--max-cosets", "10"]);
    assert_eq!(code(&o), 2, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(code(&grouplab(&["compute", "builtin:cyclic:600"])), 2);
    assert_eq!(
        code(&grouplab(&[
            "compute",
            "builtin:symmetric:4",
            "--max-group-order",
            "20"
        ])),
        2
    );
}

#[test]
fn max_cosets_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_grouplab"))
        .args(["compute", "builtin:symmetric:4"])
        .env("GROUPLAB_MAX_COSETS", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn invalid_table_is_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.json");
    fs::write(
        &f,
        r#"{"name": "bad", "kind": "cayley", "data": {"table": [[0, 1], [0, 1]]}}"#,
    )
    .unwrap();
    let o = grouplab(&["compute", f.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.json"));
}

#[test]
fn catalog_commands() {
    let cat = tempfile::tempdir().unwrap();
    write_catalog(cat.path());
    let out = tempfile::tempdir().unwrap();
    let (c, o) = (cat.path().to_str().unwrap(), out.path().to_str().unwrap());

    assert_eq!(code(&grouplab(&["compute", c, "--out", o])), 0);
    let v: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.path().join("catalog.report.json")).unwrap()).unwrap();
    let names: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["group"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["C2", "C4", "D4", "Q8", "S3"]);

    assert_eq!(code(&grouplab(&["families", c, "--out", o])), 0);
    let v: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.path().join("families.json")).unwrap()).unwrap();
    assert_eq!(v["families"].as_array().unwrap().len(), 3);

    let run = grouplab(&["verify-theorem", c, "--out", o, "--fuzz-trials", "20"]);
    assert_eq!(code(&run), 0, "{}", String::from_utf8_lossy(&run.stdout));
    let v: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.path().join("verify-theorem.json")).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 2);

    let run = grouplab(&["oracle", c, "--out", o, "--oracle-cap", "6"]);
    assert_eq!(code(&run), 0);
    let v: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.path().join("oracle.json")).unwrap()).unwrap();
    let skipped = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["status"] == "skipped")
        .count();
    assert_eq!(skipped, 2);
    assert_eq!(v["warnings"].as_array().unwrap().len(), 2);
}

#[test]
fn deterministic_output() {
    let cat = tempfile::tempdir().unwrap();
    write_catalog(cat.path());
    let c = cat.path().to_str().unwrap();
    let a = grouplab(&["verify-theorem", c, "--format", "json", "--jobs", "1"]);
    let b = grouplab(&["verify-theorem", c, "--format", "json", "--jobs", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let a = grouplab(&["compute", c, "--format", "json"]);
    let b = grouplab(&["compute", c, "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn dumps() {
    let o = grouplab(&[
        "dump-presentation",
        "builtin:dihedral:3",
        "--variant",
        "exterior",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["num_generators"], 36);

    let o = grouplab(&[
        "dump-cocycles",
        "builtin:elementary:2:2",
        "--modulus",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    // H²(V4, F2) has dimension 3.
    assert_eq!(v["h2_order"], 8);

    let o = grouplab(&["dump-cocycles", "builtin:symmetric:5"]);
    assert_eq!(code(&o), 2);
}
