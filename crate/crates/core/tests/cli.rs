//! The `licci` binary: documented invocations, exit codes, determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use perfect_ideals::licci::{verify_prop_m, verify_prop_n};

fn licci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_licci"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = licci(&all);
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", stdout(&o)))
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("licci-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn resolve_examples() {
    let o = licci(&["resolve", "--example", "N2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains("format: (1,6,8,3)") && text.contains("class: NotDynkin"),
        "{text}"
    );

    let text = stdout(&licci(&["resolve", "--gens", "X;Y;Z"]));
    assert!(
        text.contains("format: (1,3,3,1)") && text.contains("class: A3"),
        "{text}"
    );

    let v = json(&["resolve", "--example", "I_3_7"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["betti"]["format"], serde_json::json!([1, 8, 9, 2]));
    assert_eq!(v["format"]["class"], "NotDynkin");
}

#[test]
fn ideal_file_input() {
    let path = temp_file(
        "ideal.json",
        r#"{"ring": {"vars": ["X","Y","Z"], "field": "QQ"}, "gens": ["X^2","X*Y","X*Z","Y^2","Y*Z","Z^2"]}"#,
    );
    let o = licci(&["resolve", "--ideal", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("(1,6,8,3)"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(
        licci(&["resolve", "--gens", "X;Y;Z^"]).status.code(),
        Some(2)
    );
    assert_eq!(licci(&["bogus"]).status.code(), Some(2));
    assert_eq!(licci(&["resolve"]).status.code(), Some(2));
    assert_eq!(
        licci(&["resolve", "--ideal", "/nonexistent/ideal.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        licci(&["--field", "Fp:15", "resolve", "--gens", "X"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(licci(&["classify", "1,4,4,2"]).status.code(), Some(2));
}

#[test]
fn link_and_realize() {
    let v = json(&["link", "--example", "N2", "--seq", "X^2;Y^2;Z^3"]);
    assert_eq!(
        v["steps"][0]["target_betti"]["format"],
        serde_json::json!([1, 6, 9, 4])
    );
    assert_eq!(v["steps"][0]["double_link_verified"], true);

    let o = licci(&[
        "--field",
        "Fp:32003",
        "--seed",
        "1",
        "link",
        "--example",
        "N2",
        "--degrees",
        "2,2,3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("--> (1,6,9,4)"));

    let o = licci(&[
        "--field", "Fp:32003", "--seed", "3", "realize", "--format", "1,5,6,2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("format: (1,5,6,2)"));
}

#[test]
fn classify_and_licci_check() {
    let text = stdout(&licci(&["classify", "1,5,6,2"]));
    assert!(text.contains("E6"), "{text}");
    let v = json(&["licci-check", "--example", "I_3_7"]);
    assert_eq!(v["obstruction"]["verdict"], "NotLicci");
    assert_eq!(v["compressed"]["is_compressed"], true);
    let v = json(&["licci-check", "--gens", "X;Y;Z"]);
    assert_eq!(v["obstruction"]["verdict"], "Inconclusive");
}

#[test]
fn generators() {
    let text = stdout(&licci(&["gen", "example", "I_3_7"]));
    assert!(text.starts_with("X^3;"), "{text}");
    let o = licci(&[
        "--field",
        "Fp:32003",
        "--seed",
        "2",
        "gen",
        "gorenstein",
        "--m",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim().split(';').count(), 7);
    let path = temp_file(
        "matrix.json",
        r#"{"matrix": [["X","Y","Z","0"],["0","X","Y","Z"]]}"#,
    );
    let o = licci(&["gen", "minors", "--matrix", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert_eq!(stdout(&o).trim().split(';').count(), 6);
}

#[test]
fn verifiers() {
    let o = licci(&["verify", "dynkin-list", "--max-m", "50", "--max-n", "50"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));
    let o = licci(&["verify", "moves", "--max", "30"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));
}

#[test]
fn props_report_matches_library() {
    let expected = verify_prop_m(200).unwrap().passed() && verify_prop_n(200).unwrap().passed();
    let o = licci(&["--json", "verify", "props", "--smax", "200"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], expected);
    assert_eq!(o.status.code(), Some(if expected { 0 } else { 1 }));
}

#[test]
fn reproduce_passes_and_detects_tampering() {
    let o = licci(&["reproduce"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains(
            "N2 chain: PASS (formats 1,6,8,3 -> 1,6,9,4 -> 1,7,9,3; socle {xyz, x^2z^2, y^2z^2})"
        ),
        "{text}"
    );
    assert!(
        text.contains("I_3_7 chain: PASS (1,8,9,2 -> 1,5,9,5; h = 1,3,6,2 and 1,3,6,5)"),
        "{text}"
    );

    let mut expected: serde_json::Value =
        serde_json::from_str(include_str!("../data/expected.json")).unwrap();
    expected["compressed_chain"]["hilbert"] = serde_json::json!([1, 3, 6, 3]);
    let path = temp_file("expected.json", &expected.to_string());
    let o = licci(&["reproduce", "--expected", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(
        text.contains("I_3_7 chain: FAIL") && text.contains("hilbert"),
        "{text}"
    );
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        vec![
            "--json", "--field", "Fp:32003", "--seed", "5", "realize", "--format", "1,6,7,2",
        ],
        vec![
            "--json",
            "--field",
            "Fp:32003",
            "--seed",
            "9",
            "link",
            "--example",
            "N2",
            "--degrees",
            "2,2,3",
        ],
        vec!["--json", "reproduce"],
    ] {
        let a = licci(&args);
        let b = licci(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
