use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn circlefix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circlefix"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const S6_12: &str = r#"{"dim":6,"fixed_points":[{"weights":[-3,1,2]},{"weights":[-2,-1,3]}]}"#;
const CP2_013: &str = r#"{"dim":4,"fixed_points":[{"weights":[1,3]},{"weights":[-1,2]},{"weights":[-3,-2]}]}"#;
const NONRIGID: &str = r#"{"dim":4,"fixed_points":[{"weights":[1,2]},{"weights":[-1,-2]}]}"#;

#[test]
fn verify_s6_passes() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "s6.json", S6_12);
    let o = circlefix(&["verify", s(&f)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
    let o = circlefix(&["verify", s(&f), "--format", "json", "--strict-pairing"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["check"] == "strict_weight_pairing"));
}

#[test]
fn verify_bad_arity_is_input_error() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "bad_arity.json",
        r#"{"dim":6,"fixed_points":[{"weights":[-3,1,2]},{"weights":[-2,3]}]}"#,
    );
    let o = circlefix(&["verify", s(&f)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("WrongArity"), "{}", stderr(&o));
    assert!(stderr(&o).contains("fixed_points[1].weights"));
}

#[test]
fn verify_malformed_json_names_the_line() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "junk.json", "{\"dim\": 2,\n \"fixed_points\": [ {\"weights\": [1,]} ]}");
    let o = circlefix(&["verify", s(&f)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    let o = circlefix(&["verify", "/nonexistent/file.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_nonrigid_fails_with_witness() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "nonrigid.json", NONRIGID);
    let o = circlefix(&["verify", s(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL rigidity"));
    assert!(stdout(&o).contains("not_constant"));
}

#[test]
fn chi_outputs() {
    let dir = TempDir::new().unwrap();
    let s6 = write(&dir, "s6.json", S6_12);
    let cp2 = write(&dir, "cp2.json", CP2_013);
    let pt = write(&dir, "point.json", r#"{"dim":0,"fixed_points":[{"weights":[]}]}"#);
    for (f, chi, n) in [(&s6, "0,-1,1,0", "0,1,1,0"), (&cp2, "1,-1,1", "1,1,1"), (&pt, "1", "1")] {
        let o = circlefix(&["chi", s(f)]);
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines, vec![chi, n]);
    }
    let o = circlefix(&["chi", s(&s6), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["chi"], serde_json::json!([0, -1, 1, 0]));
    assert_eq!(v["n_vector"], serde_json::json!([0, 1, 1, 0]));

    let bad = write(&dir, "nonrigid.json", NONRIGID);
    let o = circlefix(&["chi", s(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not_constant"));
    let empty = write(&dir, "empty.json", r#"{"dim":2,"fixed_points":[]}"#);
    assert_eq!(circlefix(&["chi", s(&empty)]).status.code(), Some(2));
}

fn points_of(out: &str) -> Vec<Vec<i64>> {
    let v: serde_json::Value = serde_json::from_str(out).unwrap();
    v["fixed_points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| serde_json::from_value(p["weights"].clone()).unwrap())
        .collect()
}

#[test]
fn example_generators() {
    let o = circlefix(&["example", "s6", "--a", "1", "--b", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(points_of(&stdout(&o)), vec![vec![-3, 1, 2], vec![-2, -1, 3]]);

    let o = circlefix(&["example", "cpn", "--exps", "0,1,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(points_of(&stdout(&o)), vec![vec![1, 3], vec![-1, 2], vec![-3, -2]]);

    assert_eq!(circlefix(&["example", "cpn", "--exps", "0,1,1"]).status.code(), Some(2));
    assert_eq!(circlefix(&["example", "s6", "--a", "0", "--b", "2"]).status.code(), Some(2));
    assert_eq!(circlefix(&["example", "s2", "--w", "-1"]).status.code(), Some(2));
    let o = circlefix(&["example", "s2", "--w", "2"]);
    assert_eq!(points_of(&stdout(&o)), vec![vec![2], vec![-2]]);
}

#[test]
fn example_product_and_union() {
    let dir = TempDir::new().unwrap();
    let s2 = write(&dir, "s2.json", &stdout(&circlefix(&["example", "s2", "--w", "1"])));
    let o = circlefix(&["example", "product", s(&s2), s(&s2)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(points_of(&stdout(&o)).len(), 4);
    let o = circlefix(&["example", "union", s(&s2), s(&s2), s(&s2)]);
    assert_eq!(points_of(&stdout(&o)).len(), 6);

    let s6 = write(&dir, "s6.json", S6_12);
    assert_eq!(circlefix(&["example", "union", s(&s2), s(&s6)]).status.code(), Some(2));
}

#[test]
fn enumerate_scenarios() {
    let o = circlefix(&[
        "enumerate", "--n", "3", "--points", "2", "--max-weight", "3", "--effective", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["admissible"].as_array().unwrap().len(), 2);
    assert_eq!(v["weight_bound"], 3);

    let o = circlefix(&["enumerate", "--n", "2", "--points", "3", "--max-weight", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v["admissible"],
        serde_json::json!([{"dim": 4, "fixed_points": [
            {"weights": [-2, -1]}, {"weights": [-1, 1]}, {"weights": [1, 2]}]}])
    );

    let o = circlefix(&["enumerate", "--n", "1", "--points", "1", "--max-weight", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(": 0 admissible"));
}

#[test]
fn enumerate_flags() {
    let base = ["enumerate", "--n", "1", "--points", "2", "--max-weight", "3"];
    let count = |extra: &[&str]| {
        let args: Vec<&str> = base.iter().chain(extra).copied().collect();
        let o = circlefix(&args);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        v["admissible"].as_array().unwrap().len()
    };
    assert_eq!(count(&["--format", "json"]), 1);
    assert_eq!(count(&["--format", "json", "--effective", "false"]), 3);
    assert_eq!(count(&["--format", "json", "--effective=false", "--jobs", "2"]), 3);

    let o = circlefix(&["enumerate", "--n", "2", "--points", "4", "--max-weight", "2", "--dedup-flip", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["query"]["dedup_sign_flip"], true);
    assert!(v["query"].get("worker_count").is_none());
}

#[test]
fn enumerate_csv_matches_json() {
    let args = ["enumerate", "--n", "2", "--points", "4", "--max-weight", "2"];
    let json = circlefix(&[&args[..], &["--format", "json"]].concat());
    let csv = circlefix(&[&args[..], &["--format", "csv"]].concat());
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let diags = v["diagnostics"].as_array().unwrap();
    let csv_out = stdout(&csv);
    let rows: Vec<&str> = csv_out.lines().skip(1).collect();
    assert_eq!(rows.len(), diags.len());
    assert!(!rows.is_empty());
    for (row, g) in rows.iter().zip(diags) {
        let cells: Vec<&str> = row.split(',').collect();
        let join = |x: &serde_json::Value| {
            x.as_array()
                .unwrap()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(";")
        };
        assert_eq!(cells[4], join(&g["n_vector"]));
        assert_eq!(cells[5], join(&g["chi"]));
        assert_eq!(cells[8], g["rigidity"].to_string());
    }
}

#[test]
fn enumerate_with_experiments() {
    let o = circlefix(&[
        "enumerate", "--n", "2", "--points", "3", "--max-weight", "3", "--experiments", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["open_questions"]["violators"], serde_json::json!([]));
    assert_eq!(v["open_questions"]["admissible_count"], 3);
}

#[test]
fn enumerate_bad_flags() {
    // exit 3 needs a lowered ceiling; see the cli module's unit tests
    let o = circlefix(&["enumerate", "--n", "1", "--points", "0", "--max-weight", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = circlefix(&["enumerate", "--n", "1", "--points", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = circlefix(&["enumerate", "--n", "1", "--points", "1", "--max-weight", "1", "--jobs", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bounds_table() {
    let o = circlefix(&["bounds", "--max-dim", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2, 1, 2\n");
    let o = circlefix(&["bounds", "--max-dim", "12"]);
    assert_eq!(
        stdout(&o),
        "2, 1, 2\n4, 2, 3\n6, 2, 2\n8, 3, 4\n10, 3, 6\n12, 4, 4\n"
    );
    assert_eq!(circlefix(&["bounds", "--max-dim", "7"]).status.code(), Some(2));
    assert_eq!(circlefix(&["bounds", "--max-dim", "0"]).status.code(), Some(2));
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(circlefix(&[]).status.code(), Some(2));
    assert_eq!(circlefix(&["frobnicate"]).status.code(), Some(2));
    let o = circlefix(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("enumerate"));
}
