use std::path::Path;
use std::process::{Command, Output};

use genuscenter::catalog;
use genuscenter::center;
use genuscenter::gluing::Gluing;
use serde_json::Value;

fn run_env(args: &[&str], dir: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_genuscenter"));
    cmd.args(args).env_remove("GENUSCENTER_CATALOG_DIR");
    if let Some(d) = dir {
        cmd.env("GENUSCENTER_CATALOG_DIR", d);
    }
    cmd.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_env(args, None)
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

/// Fibonacci data with a mutation applied to the parsed file.
fn write_variant(dir: &Path, name: &str, edit: impl FnOnce(&mut Value)) {
    let text = catalog::to_json(&catalog::builtin("fibonacci").unwrap());
    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["name"] = Value::String(name.into());
    edit(&mut v);
    std::fs::write(dir.join(format!("{name}.json")), serde_json::to_string(&v).unwrap()).unwrap();
}

#[test]
fn classify_example_torus() {
    let out = run(&["--json", "gluing", "classify", "--sigma", "(1 3)(2 4)"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["surface"]["g"], 1);
    assert_eq!(v["surface"]["k"], 1);
    assert_eq!(v["comm"][0][1], 2);
    assert!(v["comm"][0][0].is_null());
}

#[test]
fn enum_lists_double_factorial_rows() {
    let v = json_of(&run(&["gluing", "enum", "--n", "2", "--json"]));
    assert_eq!(v["gluings"].as_array().unwrap().len(), 3);
    let v = json_of(&run(&["gluing", "enum", "--n", "3", "--json"]));
    assert_eq!(v["count"], 15);
}

#[test]
fn standard_gluing_has_requested_type() {
    let v = json_of(&run(&["--json", "gluing", "standard", "--g", "2", "--k", "3"]));
    assert_eq!((v["surface"]["g"].as_u64(), v["surface"]["k"].as_u64()), (Some(2), Some(3)));
}

#[test]
fn rank_report_equals_library_result() {
    let out = run(&["center", "rank", "--cat", "fibonacci", "--sigma", "(1 2)", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let lib = center::center_rank(&catalog::builtin("fibonacci").unwrap(), &Gluing::parse("(12)").unwrap()).unwrap();
    assert_eq!(v["rank"], 4);
    assert_eq!(v["rank"], lib.rank);
    assert_eq!(v["block_dims"], serde_json::to_value(&lib.block_dims).unwrap());
    assert_eq!(v["total_dim"], lib.total_dim);
    assert_eq!(v["surface"], serde_json::json!({"g": 0, "k": 2}));
    assert!(v.get("runtime_ms").is_none());
}

#[test]
fn reports_are_byte_identical() {
    let args = ["--json", "center", "rank", "--cat", "semion", "--sigma", "(13)(24)"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let timed = json_of(&run(&["--json", "center", "rank", "--cat", "semion", "--sigma", "(12)", "--timing"]));
    assert!(timed["runtime_ms"].is_number());
}

#[test]
fn adjoint_report_equals_library_result() {
    let out = run(&["--json", "adjoint", "check", "--cat", "rep_z2", "--sigma", "(12)(34)"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let lib =
        center::check_adjunction(&catalog::builtin("rep_z2").unwrap(), &Gluing::parse("(12)(34)").unwrap(), 2).unwrap();
    assert_eq!(v["rows"], serde_json::to_value(&lib.rows).unwrap());
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_induced_passes_and_reports_carrier() {
    let out = run(&["--json", "center", "verify-induced", "--cat", "fibonacci", "--sigma", "(12)", "--object", "tau"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["passed"], true);
    // τ induced along one orbit: 1⊗τ⊗1 + τ⊗τ⊗τ = τ + (1 + 2τ)
    assert_eq!(v["carrier"], serde_json::json!([["1", 1], ["tau", 3]]));
}

#[test]
fn validate_bundled_catalogs() {
    for key in ["fibonacci", "ising", "semion", "rep_z2", "rep_s3", "vec_z3_q"] {
        let out = run(&["--json", "validate", "--cat", key]);
        assert_eq!(out.status.code(), Some(0), "{key}");
        let v = json_of(&out);
        assert_eq!(v["checks"].as_array().unwrap().len(), 4);
    }
}

#[test]
fn float_flag_adds_decimals() {
    let v = json_of(&run(&["--json", "--float", "6", "catalog", "list"]));
    let fib = v["catalogs"].as_array().unwrap().iter().find(|e| e["key"] == "fibonacci").unwrap();
    assert_eq!(fib["dims"][1]["float"], "1.618034");
    assert_eq!(fib["modular"], true);
    assert_eq!(fib["transparent"], serde_json::json!(["1"]));
    let exact = json_of(&run(&["--json", "catalog", "list"]));
    assert!(exact["catalogs"][0]["dims"][0].get("float").is_none());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["center", "rank", "--cat", "fibonacci", "--sigma", "(12)", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["center", "rank", "--cat", "nope", "--sigma", "(12)"]).status.code(), Some(2));
    let out = run(&["--json", "center", "rank", "--cat", "fibonacci", "--sigma", "(1 3"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["kind"], "bad-gluing");
    let out = run(&["center", "verify-induced", "--cat", "ising", "--sigma", "(12)", "--object", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run(&["gluing"]).status.code(), Some(2));
}

#[test]
fn user_catalogs_and_check_failures() {
    let dir = tempfile::tempdir().unwrap();
    write_variant(dir.path(), "broken", |v| {
        // scale one F-symbol so the pentagon no longer closes
        v["F"][4]["value"] = serde_json::json!({"order": 1, "terms": [[0, 2, 1]]});
    });
    write_variant(dir.path(), "plain", |v| {
        v.as_object_mut().unwrap().remove("R");
    });
    let out = run_env(&["--json", "validate", "--cat", "broken"], Some(dir.path()));
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["passed"], false);
    assert_eq!(run_env(&["validate", "--cat", "plain"], Some(dir.path())).status.code(), Some(0));
    let out = run_env(&["--json", "center", "rank", "--cat", "plain", "--sigma", "(12)"], Some(dir.path()));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"]["kind"], "not-premodular");
    let list = json_of(&run_env(&["--json", "catalog", "list"], Some(dir.path())));
    let keys: Vec<&str> = list["catalogs"].as_array().unwrap().iter().map(|e| e["key"].as_str().unwrap()).collect();
    assert!(keys.contains(&"broken") && keys.contains(&"plain"));
    // a path works without the environment variable
    let path = dir.path().join("plain.json");
    assert_eq!(run(&["validate", "--cat", path.to_str().unwrap()]).status.code(), Some(0));
}
