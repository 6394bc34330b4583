use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scrollar"))
        .current_dir(dir)
        .env_remove("SCROLLAR_OUT_DIR")
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn read_json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn write_spec(dir: &Path, name: &str, body: &str) -> String {
    std::fs::write(dir.join(name), body).unwrap();
    name.to_string()
}

#[test]
fn p4_has_four_vertices() {
    let tmp = TempDir::new().unwrap();
    let o = run(tmp.path(), &["polytope", "4", "P", "--vertices"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().filter(|l| l.starts_with('(')).collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.contains(&"(1/3, 1/3, 1/3)"));
    assert!(tmp.path().join("scrollar-out/polytope-manifest.json").exists());
}

#[test]
fn q4_json_has_six_vertices() {
    let tmp = TempDir::new().unwrap();
    let o = run(tmp.path(), &["polytope", "4", "Q", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(v["schema_version"], 1);
    let file = read_json(&tmp.path().join("scrollar-out/polytope-Q4-d4.json"));
    assert_eq!(file, v);
}

#[test]
fn q2_needs_degree_six() {
    let tmp = TempDir::new().unwrap();
    let o = run(tmp.path(), &["polytope", "3", "Q2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("d = 6"));
    let o = run(tmp.path(), &["polytope", "6", "Q2", "--vertices"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn enumerate_small_cases() {
    let tmp = TempDir::new().unwrap();
    let o = run(tmp.path(), &["enumerate", "4", "3", "--classify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("1 2 3,3,true,"));
    assert!(rows[1].starts_with("2 2 2,3,true,"));

    let o = run(tmp.path(), &["enumerate", "3", "4"]);
    assert_eq!(stdout(&o).lines().count(), 3);
    let csv = std::fs::read_to_string(tmp.path().join("scrollar-out/enumerate-d3-g4.csv")).unwrap();
    assert_eq!(csv, stdout(&o));
}

#[test]
fn construct_concave_passes_and_replays() {
    let tmp = TempDir::new().unwrap();
    let spec = write_spec(tmp.path(), "c.json", r#"{"variant":"concave","e":[2,3,4]}"#);
    let o = run(tmp.path(), &["--seed", "11", "construct", &spec]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let manifest_path = tmp.path().join("scrollar-out/construct-manifest.json");
    let m = read_json(&manifest_path);
    assert_eq!(m["seed"], 11);
    for k in ["closure", "associativity", "etale", "h0"] {
        assert_eq!(m["verdicts"][k], "pass", "{k}");
    }
    assert_eq!(m["verdicts"]["profile"], "2 3 4");

    let o = run(tmp.path(), &["replay", manifest_path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let a = std::fs::read(tmp.path().join("scrollar-out/c-report.json")).unwrap();
    let b = std::fs::read(tmp.path().join("scrollar-out/replay/c-report.json")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn replay_detects_changed_verdicts() {
    let tmp = TempDir::new().unwrap();
    let spec = write_spec(tmp.path(), "c.json", r#"{"variant":"concave","e":[2,3,4]}"#);
    run(tmp.path(), &["construct", &spec]);
    let path = tmp.path().join("scrollar-out/construct-manifest.json");
    let mut m = read_json(&path);
    m["verdicts"]["profile"] = "2 2 5".into();
    std::fs::write(&path, serde_json::to_string(&m).unwrap()).unwrap();
    let o = run(tmp.path(), &["replay", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn construct_cyclic_compositum() {
    let tmp = TempDir::new().unwrap();
    let spec = write_spec(
        tmp.path(),
        "cy.json",
        r#"{"variant":"cyclic-compositum","factors":[{"order":2,"branch_degree":2},{"order":3,"branch_degree":498}]}"#,
    );
    let o = run(tmp.path(), &["construct", &spec]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report = read_json(&tmp.path().join("scrollar-out/cy-report.json"));
    let mut e: Vec<i64> = report["profile"]["e"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
    e.sort_unstable();
    assert_eq!(e, vec![1, 166, 167, 332, 333]);
}

#[test]
fn construct_rejects_bad_specs() {
    let tmp = TempDir::new().unwrap();
    let spec = write_spec(tmp.path(), "bad.json", r#"{"variant":"concave","e":[1,5,2]}"#);
    let o = run(tmp.path(), &["construct", &spec]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not concave"));
    let spec = write_spec(tmp.path(), "junk.json", r#"{"variant":"nope"}"#);
    assert_eq!(run(tmp.path(), &["construct", &spec]).status.code(), Some(2));
    assert_eq!(run(tmp.path(), &["construct", "missing.json"]).status.code(), Some(4));
}

#[test]
fn report_json_roundtrip_is_byte_identical() {
    let tmp = TempDir::new().unwrap();
    let spec = write_spec(tmp.path(), "c.json", r#"{"variant":"concave","e":[1,2,2,1]}"#);
    let o = run(tmp.path(), &["construct", &spec]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(tmp.path().join("scrollar-out/c-report.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let mut again = serde_json::to_string_pretty(&v).unwrap();
    again.push('\n');
    assert_eq!(again, text);

    let mut body = v.as_object().unwrap().clone();
    body.remove("schema_version");
    let report: scrollar::CoverReport = serde_json::from_value(body.clone().into()).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), serde_json::Value::Object(body));
}

#[test]
fn density_grids() {
    let tmp = TempDir::new().unwrap();
    let o = run(tmp.path(), &["density", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("classification unresolved"));

    let o = run(tmp.path(), &["--convention", "modulo-aut", "density", "3", "--grid", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("1/3,2/3,5/6,")));
    assert!(out.lines().any(|l| l.starts_with("1/2,1/2,1/1,")));
    assert!(tmp.path().join("scrollar-out/density-d3-r6-modulo-aut.csv").exists());
}

#[test]
fn out_dir_from_environment_and_flag() {
    let tmp = TempDir::new().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_scrollar"))
        .current_dir(tmp.path())
        .env("SCROLLAR_OUT_DIR", "from-env")
        .args(["enumerate", "3", "4"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(tmp.path().join("from-env/enumerate-d3-g4.csv").exists());

    let o = Command::new(env!("CARGO_BIN_EXE_scrollar"))
        .current_dir(tmp.path())
        .env("SCROLLAR_OUT_DIR", "from-env")
        .args(["--out-dir", "from-flag", "enumerate", "3", "4"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(tmp.path().join("from-flag/enumerate-d3-g4.csv").exists());
}

#[test]
fn config_file_is_applied() {
    let tmp = TempDir::new().unwrap();
    std::fs::write(tmp.path().join("cfg.json"), r#"{"seed": 99, "prime": 101, "out_dir": "cfg-out"}"#).unwrap();
    let o = run(tmp.path(), &["--config", "cfg.json", "enumerate", "3", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let m = read_json(&tmp.path().join("cfg-out/enumerate-manifest.json"));
    assert_eq!(m["seed"], 99);
    assert_eq!(m["config"]["field"]["modulus"], 101);

    std::fs::write(tmp.path().join("bad.json"), r#"{"prime": 100}"#).unwrap();
    assert_eq!(run(tmp.path(), &["--config", "bad.json", "enumerate", "3", "4"]).status.code(), Some(2));
    std::fs::write(tmp.path().join("typo.json"), r#"{"sede": 1}"#).unwrap();
    assert_eq!(run(tmp.path(), &["--config", "typo.json", "enumerate", "3", "4"]).status.code(), Some(2));
}

#[test]
fn figures_emit_data() {
    let tmp = TempDir::new().unwrap();
    let o = run(tmp.path(), &["figures", "triangle"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = read_json(&tmp.path().join("scrollar-out/figure-triangle.json"));
    assert_eq!(v["P4"]["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(v["P4prime"]["vertices"].as_array().unwrap().len(), 3);

    let o = run(tmp.path(), &["figures", "q3d"]);
    assert_eq!(o.status.code(), Some(0));
    let v = read_json(&tmp.path().join("scrollar-out/figure-q3d.json"));
    assert_eq!(v["Q4"]["vertices"].as_array().unwrap().len(), 6);

    let o = run(tmp.path(), &["figures", "fin-lines", "--genus", "33"]);
    assert_eq!(o.status.code(), Some(0));
    let v = read_json(&tmp.path().join("scrollar-out/figure-fin-lines.json"));
    let lines = v["data"].as_array().unwrap();
    // e1 = (h+1)/36 <= 1/5 for h = 0..=6.
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[0]["e1"], "1/36");

    assert_eq!(run(tmp.path(), &["figures", "nope"]).status.code(), Some(2));
}

#[test]
fn bad_usage_exits_two() {
    let tmp = TempDir::new().unwrap();
    assert_eq!(run(tmp.path(), &["polytope"]).status.code(), Some(2));
    assert_eq!(run(tmp.path(), &["--retries", "0", "enumerate", "3", "4"]).status.code(), Some(2));
    assert_eq!(run(tmp.path(), &["--rationals", "--prime", "7", "enumerate", "3", "4"]).status.code(), Some(2));
    assert_eq!(run(tmp.path(), &["--help"]).status.code(), Some(0));
}
