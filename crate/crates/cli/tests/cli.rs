use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_origami-lab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn genus_of_l_shape() {
    let o = run(&["genus", &data("l-shape.origami.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn enumerate_reports_minimal_genus_three() {
    let o = run(&["--format", "json", "enumerate", "--n", "5", "--genus", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!v.as_array().unwrap().is_empty());
}

#[test]
fn cores_then_pair_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().display().to_string();
    let o = run(&["cores", &data("genus2-4.origami.json"), "--out-dir", &out]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let h = dir.path().join("h0.curve.json").display().to_string();
    let v = dir.path().join("v0.curve.json").display().to_string();
    let o = run(&["--format", "json", "pair2origami", &h, &v]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let back: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(back["n"], 4);

    // A curve paired with itself does not fill.
    let o = run(&["pair2origami", &h, &h]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hempel_path_and_quotients() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json").display().to_string();
    let pair = data("hempel.curvepair.json");
    let o = run(&["bicorn-path", &pair, "--out", &path]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(run(&["verify-path", &path]).status.code(), Some(0));
    let o = run(&["quotients", &pair]);
    assert!(stdout(&o).contains("4/1 > 2/8 > 1/19"), "{}", stdout(&o));
}

#[test]
fn render_draws_one_rect_per_square() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("o.svg");
    let o = run(&["render", "--out", &svg.display().to_string(), &data("hempel.origami.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(svg).unwrap();
    assert_eq!(text.matches("<rect").count(), 21);
}

#[test]
fn csv_side_output() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("g.csv");
    let g = data("genus2-4.origami.json");
    let cores = dir.path().display().to_string();
    assert_eq!(run(&["cores", &g, "--out-dir", &cores]).status.code(), Some(0));
    let a = dir.path().join("h0.curve.json").display().to_string();
    let b = dir.path().join("v0.curve.json").display().to_string();
    let o = run(&["--emit-csv", &csv.display().to_string(), "growth", "--n", "2", &a, &b]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(csv).unwrap();
    assert!(text.lines().next().unwrap().contains("i_a"));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn bad_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"n\":2").unwrap();
    assert_eq!(run(&["genus", &bad.display().to_string()]).status.code(), Some(1));
    assert_eq!(run(&["genus"]).status.code(), Some(1));
    assert_eq!(run(&["genus", "/nonexistent/o.json"]).status.code(), Some(1));
}

#[test]
fn invalid_origami_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("o.json");
    std::fs::write(&bad, r#"{"n":2,"h":[0,0],"v":[0,1]}"#).unwrap();
    let o = run(&["validate", &bad.display().to_string()]);
    assert_eq!(o.status.code(), Some(2));
}
