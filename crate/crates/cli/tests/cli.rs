use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_convex-profile"));
    c.env_remove("CONVEX_PROFILE_SEED");
    c
}

fn write(dir: &TempDir, name: &str, v: &Value) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, v.to_string()).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn report(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn cone() -> Value {
    json!({"kind": "h-polyhedron", "dim": 2, "halfspaces": [
        {"normal": ["1", "-1"], "offset": "0"},
        {"normal": ["-1", "-1"], "offset": "0"}
    ]})
}

fn l_polygon() -> Value {
    json!({"kind": "polygon", "outer": [[0, 0], [2, 0], [2, 1], [1, 1], [1, 2], [0, 2]], "holes": []})
}

#[test]
fn extremes_of_the_cone() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "cone.json", &cone());
    let r = report(&run(&["extremes", s(&f)]));
    assert_eq!(r["command"], "extremes");
    assert_eq!(r["inputs"], json!([s(&f)]));
    assert_eq!(r["results"][0]["extreme_points"], json!([["0", "0"]]));
    assert_eq!(r["results"][0]["reconstructs"], false);
    assert_eq!(r["config"]["seed"], 0xC0FFEE);
}

#[test]
fn extremes_of_a_square_reconstruct() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "sq.json", &json!({"kind": "h-polyhedron", "dim": 2, "halfspaces": [
        {"normal": [1, 0], "offset": "1"}, {"normal": [-1, 0], "offset": "0"},
        {"normal": [0, 1], "offset": "1"}, {"normal": [0, -1], "offset": "0"}
    ]}));
    let r = report(&run(&["extremes", s(&f)]));
    assert_eq!(r["results"][0]["extreme_points"].as_array().unwrap().len(), 4);
    assert_eq!(r["results"][0]["reconstructs"], true);
}

#[test]
fn l_polygon_convexity_witness() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "l.json", &l_polygon());
    let r = report(&run(&["convexity", s(&f)]));
    let res = &r["results"][0];
    assert_eq!(res["convex"], false);
    assert_eq!(res["convex_by_pairs"], false);
    let mut pair = vec![res["witness"]["p"].clone(), res["witness"]["q"].clone()];
    pair.sort_by_key(|v| v.to_string());
    assert_eq!(pair, vec![json!(["1", "2"]), json!(["2", "1"])]);
    assert_eq!(res["witness"]["class"], "elliptic");
}

#[test]
fn pointed_box_is_flagged() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "box.json", &json!({"kind": "pointed-open-box"}));
    let r = report(&run(&["convexity", s(&f)]));
    assert_eq!(r["results"][0]["convex_by_pairs"], true);
    assert_eq!(r["results"][0]["convex"], false);
    assert_eq!(r["results"][0]["expected_counterexample_of_closedness"], true);
}

#[test]
fn classify_with_a_pairs_file() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "l.json", &l_polygon());
    let pairs = write(&dir, "pairs.json", &json!({"pairs": [[[0, 0], [2, 0]], [[2, 1], [1, 2]], [[0, 0], [1, 1]]]}));
    let r = report(&run(&["classify", s(&f), "--pairs", s(&pairs)]));
    let classes: Vec<&str> = r["results"][0]["pairs"].as_array().unwrap().iter().map(|p| p["class"].as_str().unwrap()).collect();
    assert_eq!(classes, ["flat", "elliptic", "hyperbolic"]);
}

#[test]
fn kernel_of_the_l_polygon() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "l.json", &l_polygon());
    let r = report(&run(&["kernel", s(&f)]));
    let res = &r["results"][0];
    assert_eq!(res["starshaped"], true);
    let mut v: Vec<String> = res["kernel_vertices"].as_array().unwrap().iter().map(|p| p.to_string()).collect();
    v.sort();
    assert_eq!(v, [r#"["0","0"]"#, r#"["0","1"]"#, r#"["1","0"]"#, r#"["1","1"]"#]);
}

#[test]
fn reconstruct_selects_mode_by_boundedness() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "cone.json", &cone());
    let r = report(&run(&["reconstruct", s(&f)]));
    assert_eq!(r["results"][0]["theorem"], "thm-10");
    let tri = write(&dir, "tri.json", &json!({"kind": "h-polyhedron", "dim": 2, "halfspaces": [
        {"normal": [-1, 0], "offset": "0"}, {"normal": [0, -1], "offset": "0"}, {"normal": [1, 1], "offset": "1"}
    ]}));
    let r = report(&run(&["reconstruct", s(&tri)]));
    assert_eq!(r["results"][0]["theorem"], "thm-13");
    assert_eq!(r["results"][0]["conclusion"], "holds");
}

#[test]
fn check_cor5_with_seed() {
    let r = report(&run(&["check", "cor-5", "--instances", "200", "--seed", "7"]));
    let results = r["results"].as_array().unwrap();
    assert_eq!(results.len(), 200);
    assert!(results.iter().all(|x| x["theorem"] == "cor-5" && x["conclusion"] == "holds"));
    assert_eq!(r["config"]["seed"], 7);
}

#[test]
fn env_seed_overrides_flag() {
    let a = bin().args(["check", "prop-11", "--instances", "5", "--seed", "1"]).env("CONVEX_PROFILE_SEED", "0x2a").output().unwrap();
    let b = run(&["check", "prop-11", "--instances", "5", "--seed", "42"]);
    assert_eq!(report(&a), report(&b));
}

#[test]
fn out_flag_writes_the_report() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "cone.json", &cone());
    let out = dir.path().join("r.json");
    let o = run(&["extremes", s(&f), "--out", s(&out)]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(r["command"], "extremes");
}

fn error_of(o: &Output) -> Value {
    assert_eq!(o.status.code(), Some(2), "stdout: {}", String::from_utf8_lossy(&o.stdout));
    serde_json::from_slice::<Value>(&o.stderr).unwrap()["error"].clone()
}

#[test]
fn schema_errors_name_path_and_field() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.json", &json!({"kind": "h-polyhedron", "dim": 2, "halfspaces": [{"normal": [1.5, 0], "offset": "1"}]}));
    let e = error_of(&run(&["extremes", s(&f)]));
    assert_eq!(e["kind"], "schema");
    assert_eq!(e["field"], "normal");
    assert!(e["path"].as_str().unwrap().contains("halfspaces[0]"), "{e}");

    let f = write(&dir, "kind.json", &json!({"kind": "torus"}));
    let e = error_of(&run(&["convexity", s(&f)]));
    assert_eq!(e["field"], "kind");

    std::fs::write(dir.path().join("junk.json"), "{not json").unwrap();
    let e = error_of(&run(&["convexity", s(&dir.path().join("junk.json"))]));
    assert_eq!(e["kind"], "schema");
}

#[test]
fn other_input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    assert_eq!(error_of(&run(&["extremes", s(&dir.path().join("missing.json"))]))["kind"], "io");
    assert_eq!(error_of(&run(&["check", "thm-99"]))["kind"], "usage");
    assert_eq!(error_of(&run(&["frobnicate"]))["kind"], "usage");
    let f = write(&dir, "cone.json", &cone());
    assert_eq!(error_of(&run(&["kernel", s(&f)]))["kind"], "geometry");
    assert!(run(&["--help"]).status.success());
}

fn svg_of(dir: &TempDir, input: &Path, extra: &[&str]) -> String {
    let out = dir.path().join("out.svg");
    let mut args = vec!["render", s(input), "--svg", s(&out)];
    args.extend_from_slice(extra);
    report(&run(&args));
    std::fs::read_to_string(out).unwrap()
}

#[test]
fn render_unit_square_diagonal() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "sq.json", &json!({"kind": "polygon", "outer": [[0, 0], [1, 0], [1, 1], [0, 1]], "holes": []}));
    let pairs = write(&dir, "diag.json", &json!([[[0, 0], [1, 1]]]));
    let svg = svg_of(&dir, &f, &["--pairs", s(&pairs)]);
    assert!(svg.starts_with("<svg") && svg.contains(r#"width="800""#));
    assert_eq!(svg.matches(r#"data-class="Hyperbolic""#).count(), 1);
    assert_eq!(svg.matches("data-class=").count(), 1);
    assert_eq!(svg, svg_of(&dir, &f, &["--pairs", s(&pairs)]));
}

#[test]
fn render_l_polygon_kernel() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "l.json", &l_polygon());
    let svg = svg_of(&dir, &f, &["--pairs", "none"]);
    assert!(svg.contains(r#"<g id="kernel">"#));
    assert!(!svg.contains("data-class="));
}

#[test]
fn render_disk_pairs_are_hyperbolic() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "disk.json", &json!({"kind": "disk", "center": [0, 0], "radius": "1"}));
    let pts = [["1", "0"], ["3/5", "4/5"], ["0", "1"], ["-4/5", "3/5"], ["-1", "0"], ["5/13", "-12/13"]];
    let pairs: Vec<Value> = (0..10).map(|k| json!([pts[k % 6], pts[(k + 1 + k / 6) % 6]])).collect();
    let pf = write(&dir, "pairs.json", &json!({"pairs": pairs}));
    let svg = svg_of(&dir, &f, &["--pairs", s(&pf)]);
    assert_eq!(svg.matches(r#"data-class="Hyperbolic""#).count(), 10);
}

#[test]
fn render_rejects_3d() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.json", &json!({"kind": "v-polytope", "dim": 3, "points": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]}));
    let out = dir.path().join("x.svg");
    assert_eq!(error_of(&run(&["render", s(&f), "--svg", s(&out)]))["kind"], "geometry");
}
