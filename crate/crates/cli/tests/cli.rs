use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use graphprod::verify::RunReport;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_graphprod"))
}

fn configs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write_config(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

const EDGE_Z2: &str = r#"{"version": 1, "vertices": [
    {"id": 0, "group": {"kind": "cyclic", "n": 2}},
    {"id": 1, "group": {"kind": "cyclic", "n": 2}}], "edges": [[0, 1]]}"#;

const SINGLE_Z: &str = r#"{"version": 1, "vertices": [{"id": 0, "group": {"kind": "integers"}}]}"#;

const DIHEDRAL: &str = r#"{"version": 1, "vertices": [
    {"id": 0, "group": {"kind": "cyclic", "n": 2}},
    {"id": 1, "group": {"kind": "cyclic", "n": 2}}]}"#;

#[test]
fn normalize_commuting_square_roots() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "edge.json", EDGE_Z2);
    let o = run(&["--config", &cfg, "--json", "normalize", "v0:1; v1:1; v0:1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["normal_form"], "v1:1");
    assert_eq!(v["reduced_length"], 1);
}

#[test]
fn normalize_output_parses_back_to_itself() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "path.json", &fs::read_to_string(configs_dir().join("path-mixed.json")).unwrap());
    for word in ["v2:3; v0:1; v1:2; v2:-1; v0:1", "e", "v1:1; v0:1; v1:1; v2:4"] {
        let first = run(&["--config", &cfg, "normalize", word]);
        assert!(first.status.success(), "{}", stderr(&first));
        let text = stdout(&first);
        let nf = text.lines().next().unwrap();
        let second = run(&["--config", &cfg, "normalize", nf]);
        assert_eq!(stdout(&second), text, "normal form of {word:?} is not stable");
    }
}

#[test]
fn phi_on_integers() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "z.json", SINGLE_Z);
    let o = run(&["--config", &cfg, "--json", "phi", "v0:5"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["reduced_length"], 1);
    assert_eq!(v["phi_tilde"], 5.0);
    assert_eq!(v["phi_gamma"], 6.0);
    let text = stdout(&run(&["--config", &cfg, "phi", "v0:-2; v0:-1"]));
    assert!(text.contains("phi_gamma = 4"), "{text}");
}

#[test]
fn bad_word_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "z.json", SINGLE_Z);
    let o = run(&["--config", &cfg, "normalize", "v3:1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["--config", &cfg, "normalize", "v0:x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parse error at byte 3"), "{}", stderr(&o));
}

#[test]
fn ball_of_infinite_dihedral_group() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "d.json", DIHEDRAL);
    let o = run(&["--config", &cfg, "--json", "ball", "--radius", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let elements = v["elements"].as_array().unwrap();
    assert_eq!(elements.len(), 5);
    assert_eq!(v["truncated"], false);
    let o = run(&["--config", &cfg, "ball", "--radius", "10", "--cap", "4"]);
    assert!(stdout(&o).contains("4 elements (truncated)"), "{}", stdout(&o));
}

#[test]
fn bundled_configs_verify_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let mut names: Vec<_> = fs::read_dir(configs_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    names.sort();
    assert!(names.len() >= 5);
    for cfg in names {
        let out = dir.path().join(cfg.file_name().unwrap());
        let o = run(&[
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
            "verify",
        ]);
        assert_eq!(o.status.code(), Some(0), "{}\n{}", cfg.display(), stdout(&o));
        let report: RunReport = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
        assert!(report.pass);
        assert!(!report.checks.is_empty());
        assert_eq!(report.suite, cfg.file_stem().unwrap().to_str().unwrap());

        let o = run(&["report", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("all checks passed"));
    }
}

#[test]
fn failing_report_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "d.json", DIHEDRAL);
    let out = dir.path().join("r.json");
    let o = run(&["--config", &cfg, "--out", out.to_str().unwrap(), "verify"]);
    assert_eq!(o.status.code(), Some(0));

    let mut report: RunReport = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    report.checks[0].pass = false;
    report.pass = false;
    fs::write(&out, serde_json::to_string(&report).unwrap()).unwrap();
    let o = run(&["report", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn seed_override_is_recorded() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "d.json", DIHEDRAL);
    let o = run(&["--config", &cfg, "--seed", "9", "--json", "verify"]);
    assert_eq!(o.status.code(), Some(0));
    let report: RunReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report.parameters.seed, 9);
    assert!(report.checks.iter().any(|c| c.seed == Some(9)));
}

#[test]
fn missing_output_directory_fails() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "d.json", DIHEDRAL);
    let out = dir.path().join("no/such/dir/r.json");
    let o = run(&["--config", &cfg, "--out", out.to_str().unwrap(), "verify"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("does not exist"), "{}", stderr(&o));
}

#[test]
fn invalid_config_lists_every_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "bad.json",
        r#"{"version": 1, "vertices": [
            {"id": 0, "group": {"kind": "integers"}},
            {"id": 1, "group": {"kind": "quaternion"}}],
            "edges": [[0, 0], [0, 1], [1, 0]]}"#,
    );
    let o = run(&["--config", &cfg, "verify"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    for needle in ["loop edge", "duplicate edge", "unknown group kind"] {
        assert!(err.contains(needle), "missing {needle:?} in {err}");
    }
}

#[test]
fn missing_config_and_unreadable_report() {
    let o = run(&["normalize", "e"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--config"));
    let o = run(&["report", "/definitely/not/here.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn help_lists_defaults() {
    let o = run(&["--help"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for needle in ["radius 3", "cap 300", "tol 1e-8", "seed 42", "samples 200"] {
        assert!(text.contains(needle), "missing {needle:?} in help");
    }
}
