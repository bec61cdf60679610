use std::process::{Command, Output};

use serde_json::Value;

fn orbikit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbikit"))
        .args(args)
        .env_remove("ORBIKIT_FIXTURES")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = orbikit(&a);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn sakuma_with_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let ab = dir.path().join("ab.json");
    std::fs::write(&ab, r#"{"abelianization": true}"#).unwrap();
    let v = json(&["sakuma", "--base", "p1_236.json", "--quotient", ab.to_str().unwrap(), "--oracle"]);
    assert_eq!(v["b1_cover"], 2);
    assert_eq!(v["oracle_b1"], 2);
    assert_eq!(v["quotient_order"], 6);
    assert_eq!(v["depth_table"][0], serde_json::json!({"character": [1], "depth": 1}));
}

#[test]
fn cover_analyze_icosahedral() {
    let out = orbikit(&["cover", "analyze", "--spec", "p1_235.json", "--rep", "icosahedral5.json"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("degree 5\n"), "{text}");
    assert!(text.contains("indices (2,3,3)"), "{text}");
    assert!(text.contains("euler characteristic 1/6"), "{text}");
    let v = json(&["cover", "analyze", "--spec", "elliptic", "--rep", "elliptic-sigma4"]);
    let c = &v["covers"][0];
    assert_eq!(c["genus_upstairs"], 3);
    assert_eq!(c["euler_orb_upstairs"], serde_json::json!({"num": -4, "den": 1}));
    assert_eq!(c["flags"]["virtually_regular"], true);
    assert_eq!(c["flags"]["regular"], false);
}

#[test]
fn malformed_json_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"genus\": 0,\n \"indices\": [2, 3,]}").unwrap();
    let out = orbikit(&["h1", "-i", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2, column"), "{}", stderr(&out));
}

#[test]
fn schema_errors_are_parse_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"generators": ["a"], "relators": ["a^2 b"]}"#).unwrap();
    let out = orbikit(&["h1", "-i", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown generator `b`"), "{}", stderr(&out));
}

#[test]
fn exit_codes() {
    assert_eq!(orbikit(&["abelian-cover", "--indices", "2,3,5"]).status.code(), Some(2));
    assert_eq!(orbikit(&["h1", "-i", "no-such-input"]).status.code(), Some(1));
    assert_eq!(orbikit(&["fixture", "nope"]).status.code(), Some(1));
    assert_eq!(orbikit(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(orbikit(&["h1", "-i", "p1-236", "--jobs", "0"]).status.code(), Some(1));
    // H1 of the Ceva complement is infinite, so it has no character sweep.
    assert_eq!(orbikit(&["depth", "-i", "ceva"]).status.code(), Some(2));
    assert_eq!(orbikit(&["--help"]).status.code(), Some(0));
}

#[test]
fn h1_formats() {
    let out = orbikit(&["h1", "-i", "seven-line-derived"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "Z^4 + Z/4\n");
    assert_eq!(json(&["h1", "-i", "p1-236"]), serde_json::json!({"free_rank": 0, "torsion": [6]}));
}

#[test]
fn abelian_cover_genus() {
    let v = json(&["abelian-cover", "--indices", "2,3,6"]);
    assert_eq!(v["degree"], 6);
    assert_eq!(v["genus"], 1);
    assert_eq!(v["variant_genus"], serde_json::json!({"num": 4, "den": 1}));
    assert_eq!(v["namba_uniformizing"], true);
}

#[test]
fn charvar_and_restriction() {
    let v = json(&["charvar", "-i", "p1-236", "-k", "1"]);
    assert_eq!(v["characters"], serde_json::json!([[1], [5]]));
    let v = json(&["charvar", "-i", "p1-236", "-k", "2"]);
    assert_eq!(v["characters"], serde_json::json!([]));
    let v = json(&["restriction", "-i", "p1-236"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
}

#[test]
fn rs_and_saturation() {
    let v = json(&["cover", "rs", "-i", "p1-235", "--rep", "icosahedral5"]);
    assert_eq!(v["presentation"]["generators"].as_array().unwrap().len(), 5 * 3 - 4);
    let v = json(&["saturation", "-i", "seven-line"]);
    let rows = v["meridians"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|r| r["order_h1"] == 2));
    let v = json(&["cover", "fibers", "-i", "degree6-map"]);
    assert_eq!(v["stated_source_consistent"], false);
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = orbikit(&["depth", "-i", "seven-line", "--format", "json", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let stdout = orbikit(&["depth", "-i", "seven-line", "--format", "json"]).stdout;
    assert_eq!(std::fs::read(&path).unwrap(), stdout);
}

#[test]
fn printed_documents_read_back() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["seven-line", "p1-236", "ceva"] {
        let path = dir.path().join(format!("{name}-copy.json"));
        let out = orbikit(&["group", "-i", name, "--format", "json", "-o", path.to_str().unwrap()]);
        assert!(out.status.success());
        let again = json(&["group", "-i", path.to_str().unwrap()]);
        assert_eq!(again, json(&["group", "-i", name]), "{name}");
        assert_eq!(json(&["h1", "-i", path.to_str().unwrap()]), json(&["h1", "-i", name]));
    }
}

#[test]
fn fixtures_print_and_override() {
    let v = json(&["fixture", "seven-line"]);
    assert_eq!(v["kind"], "presentation");
    assert_eq!(v["document"]["generators"].as_array().unwrap().len(), 7);
    let v = json(&["fixture", "ceva"]);
    assert_eq!(v["provenance"], "derived");
    let list = json(&["fixture"]);
    assert!(list.as_array().unwrap().contains(&Value::from("elliptic-sigma4")));

    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("p1-236.json"),
        r#"{"name": "p1-236", "kind": "orbicurve", "description": "replaced", "document": {"indices": [2, 2, 2]}}"#,
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_orbikit"))
        .args(["h1", "-i", "p1-236"])
        .env("ORBIKIT_FIXTURES", dir.path())
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "Z/2 + Z/2\n");
}
