//! Golden tests for the `toric` binary: stable outputs, exit codes, and
//! file emission.

use std::process::{Command, Output};

fn toric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = toric(args);
    assert!(out.status.success(), "{args:?}: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn invariants_json_golden() {
    assert_eq!(
        stdout(&["invariants", "0/1 1/0 1/1"]),
        "{\"n\":3,\"euler\":3,\"b2\":1,\"sigma\":1,\"b2_plus\":1,\"b2_minus\":0,\
         \"spin\":false,\"almost_complex\":true}\n"
    );
}

#[test]
fn classify_goldens() {
    assert_eq!(stdout(&["classify", "0/1 1/0 0/1 1/2"]), "#1 (S2xS2)\n");
    assert_eq!(stdout(&["classify", "0/1 1/0"]), "S4\n");
    assert_eq!(stdout(&["classify", "1/0 1/0 1/0"]), "S1xS3\n");
    assert_eq!(stdout(&["classify", "0/1 1/0 0/1 1/1"]), "#1 CP2 # #1 CP2bar\n");
    let traced = stdout(&["classify", "--trace", "0/1 1/0 1/1"]);
    assert_eq!(traced, "step 1: Triangle at 1, sign +1\n#1 CP2\n");
}

#[test]
fn validate_errors_and_exit_codes() {
    let out = toric(&["validate", "0/1 2/1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        String::from_utf8(out.stderr).unwrap(),
        "adjacency violation at position 1\n"
    );
    assert_eq!(stdout(&["validate", "0/1 1/0 1/1"]), "valid loop with 3 slopes\n");
    let out = toric(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn plumbing_golden() {
    assert_eq!(
        stdout(&["plumbing", "0/1 1/0 3/1 5/2"]),
        "euler: [3, 2]; boundary: L(5,2)\n"
    );
    assert_eq!(stdout(&["plumbing", "0/1 1/0 0/1"]), "euler: [0]; boundary: S1xS2\n");
}

#[test]
fn enumerate_golden() {
    let out = stdout(&["enumerate", "-n", "6"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "count: 3");
    assert_eq!(lines.len(), 4);
    let out = stdout(&["enumerate", "-n", "6", "--cyclic-only"]);
    assert!(out.starts_with("count: 4\n"));
}

#[test]
fn surgery_round_trip() {
    assert_eq!(stdout(&["blowup", "0/1 1/0", "-i", "1", "-s", "-1"]), "0/1 1/1 1/0\n");
    assert_eq!(stdout(&["sum-s2s2", "0/1 1/0", "-i", "1"]), "0/1 1/0 0/1 1/0\n");
    assert_eq!(stdout(&["mirror", "0/1 1/0 1/1"]), "0/1 1/0 -1/1\n");
    assert_eq!(
        stdout(&["repeat", "0/1 1/0 1/1", "-r", "2"]),
        "0/1 1/0 1/1 0/1 1/0 1/1\n"
    );
}

#[test]
fn conjugacy_and_canonical() {
    assert_eq!(stdout(&["conjugate", "0/1 1/0 1/1", "1/0 1/1 0/1"]), "conjugate\n");
    assert_eq!(
        stdout(&["conjugate", "--cyclic-only", "0/1 1/0 1/1", "0/1 1/0 -1/1"]),
        "not conjugate\n"
    );
    let canonical = stdout(&["canonical", "1/2 0/1 1/0 1/1"]);
    assert_eq!(canonical, stdout(&["canonical", "0/1 1/0 1/1 1/2"]));
}

#[test]
fn form_golden() {
    assert_eq!(stdout(&["form", "0/1 1/0 0/1 1/2"]), "[[0, 1], [1, -2]]\n");
    assert_eq!(
        stdout(&["form", "--json", "0/1 1/0 0/1 1/2"]),
        "{\"entries\":[[0,1],[1,-2]],\"size\":2}\n"
    );
}

#[test]
fn curve_and_cover_goldens() {
    assert_eq!(
        stdout(&["curve", "-p", "7", "-q", "4"]),
        "p: 7; q: 4; bridge_b: 19; genus: 18; chi: -34; pi1_order: 1\n"
    );
    assert_eq!(stdout(&["cover", "-p", "4", "-q", "4", "-n", "2"]), "genus: 11; family: E(2)\n");
    assert_eq!(
        stdout(&["cover", "-p", "2", "-q", "4", "-n", "2"]),
        "genus: 5; family: rational CP2 # 9 CP2bar\n"
    );
    let out = toric(&["cover", "-p", "3", "-q", "5", "-n", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        String::from_utf8(out.stderr).unwrap(),
        "2 does not divide gcd(3, 5)\n"
    );
}

#[test]
fn file_input_and_emission() {
    let dir = std::env::temp_dir().join("toric-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let diagram = dir.join("loop.json");
    std::fs::write(&diagram, "{\"slopes\": [[1,0],[0,1],[1,1]]}").unwrap();
    let out = stdout(&["classify", "--in", diagram.to_str().unwrap()]);
    assert_eq!(out, "#1 CP2\n");

    let svg = dir.join("curve.svg");
    let json = dir.join("curve.json");
    stdout(&[
        "curve", "-p", "2", "-q", "2",
        "--svg", svg.to_str().unwrap(),
        "--json", json.to_str().unwrap(),
    ]);
    let svg_text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(svg_text.matches("<circle").count(), 4);
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(doc["bridge_b"], 2);
    assert_eq!(doc["homology"], serde_json::json!([2, 2]));
    assert_eq!(doc["bridge_points"].as_array().unwrap().len(), 4);
    assert_eq!(doc["arcs"].as_array().unwrap().len(), 8);

    let farey = dir.join("farey.svg");
    stdout(&["validate", "0/1 1/0 1/1", "--svg", farey.to_str().unwrap()]);
    let first = std::fs::read(&farey).unwrap();
    stdout(&["validate", "0/1 1/0 1/1", "--svg", farey.to_str().unwrap()]);
    assert_eq!(first, std::fs::read(&farey).unwrap());
}
