use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_loctrop"))
}

fn example(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(name);
    let value: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&value).expect("schema compiles")
}

fn assert_valid(v: &jsonschema::Validator, doc: &Value, what: &str) {
    let errors: Vec<String> = v.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{what}: {errors:?}");
}

fn write_input(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const MONOMIAL: &str = r#"{"vars": ["x", "y"], "exact": true, "terms": [{"c": "1", "e": [1, 0]}]}"#;

#[test]
fn example_inputs_match_the_input_schema() {
    let v = schema("input.schema.json");
    for name in ["truncated_series.json", "unit.json", "two_generators.json", "nodal_cubic.json"] {
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(example(name)).unwrap()).unwrap();
        assert_valid(&v, &doc, name);
    }
}

#[test]
fn every_json_output_matches_the_output_schema() {
    let v = schema("output.schema.json");
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("fig.svg").display().to_string();
    let series = example("truncated_series.json");
    let ideal = example("two_generators.json");
    let nodal = example("nodal_cubic.json");
    let unit = example("unit.json");
    let runs: Vec<Vec<&str>> = vec![
        vec!["staircase", &series],
        vec!["staircase", &series, "--stratum", "1"],
        vec!["initial", &series, "-w", "1,1"],
        vec!["initial", &ideal, "-w", "1,2,1"],
        vec!["trophyp", &series],
        vec!["tropvar", &series, "--origin", "monomial-test"],
        vec!["tropvar", &nodal, "--method", "groebner"],
        vec!["prevariety", &ideal],
        vec!["stdbasis", &ideal, "-w", "1,1,1"],
        vec!["lgf", &unit],
        vec!["lgf", &nodal],
        vec!["tropbasis", &ideal],
        vec!["verify", &nodal, "--samples", "20"],
        vec!["plot", &series, "-o", &svg],
    ];
    for mut args in runs {
        args.extend(["--format", "json"]);
        let doc = stdout_json(&args);
        assert_valid(&v, &doc, &args.join(" "));
    }
}

#[test]
fn staircase_on_stratum_one_is_minus_x_squared() {
    let doc = stdout_json(&["staircase", &example("truncated_series.json"), "--stratum", "1", "--format", "json"]);
    let row = &doc["result"]["strata"][0];
    let expected: Value = serde_json::json!([{"c": "-1", "e": [2, 0]}]);
    assert_eq!(row["tilde"], expected);
    assert_eq!(row["hat"], expected);
    assert_eq!(row["soundness"], "COMPLETE-IF-TAIL-DOMINATED");
    assert_eq!(doc["metadata"]["soundness"], "COMPLETE-IF-TAIL-DOMINATED");
}

#[test]
fn sample_variety_is_the_diagonal_ray() {
    let doc = stdout_json(&["tropvar", &example("truncated_series.json"), "--format", "json"]);
    let fan = &doc["result"]["fan"];
    assert_eq!(fan["rays"], serde_json::json!([[1, 1]]));
    assert_eq!(fan["cones"].as_array().unwrap().len(), 2);
    assert_eq!(doc["metadata"]["origin_semantics"], "definition");
}

#[test]
fn svg_shows_the_diagonal_ray_and_origin() {
    let out = run(&["tropvar", &example("truncated_series.json"), "--format", "svg"]);
    assert!(out.status.success());
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.starts_with("<svg"));
    // the ray runs from the origin corner to the opposite corner of the viewport
    assert!(svg.contains(r#"<line x1="60.00" y1="460.00" x2="460.00" y2="60.00""#), "{svg}");
    assert!(svg.contains(">(1,1)</text>"));
    assert!(svg.contains("<circle"));
}

#[test]
fn plot_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.svg");
    let out = run(&["plot", &example("truncated_series.json"), "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.contains(">(1,1)</text>"));
}

#[test]
fn unit_ideal_gives_one_cone_per_stratum_and_an_empty_variety() {
    let doc = stdout_json(&["lgf", &example("unit.json"), "--format", "json"]);
    let result = &doc["result"];
    assert_eq!(result["fan"]["cones"].as_array().unwrap().len(), 4);
    assert_eq!(result["variety_cones"], serde_json::json!([]));
    assert!(result["warnings"].as_array().unwrap().iter().any(|w| w == "unit ideal"));
}

#[test]
fn groebner_path_of_nodal_cubic_keeps_the_axis_and_diagonal() {
    let doc = stdout_json(&["tropvar", &example("nodal_cubic.json"), "--method", "groebner", "--format", "json"]);
    let rays = &doc["result"]["fan"]["rays"];
    assert_eq!(rays, &serde_json::json!([[0, 1], [1, 1]]));
}

#[test]
fn parse_errors_name_the_json_path_and_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_input(&dir, "bad.json", r#"{"vars": ["x"], "exact": true, "terms": [{"c": "0.5", "e": [1]}]}"#);
    let out = run(&["trophyp", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("$.terms[0].c"), "{err}");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["tropvar"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn domain_errors_exit_one() {
    let out = run(&["lgf", &example("truncated_series.json")]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["initial", &example("truncated_series.json"), "-w", "1,-1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn strict_mode_exits_two_on_unknown_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_input(&dir, "mono.json", MONOMIAL);
    let p = p.to_str().unwrap();
    let relaxed = run(&["lgf", p, "--bound", "0"]);
    assert_eq!(relaxed.status.code(), Some(0));
    assert!(String::from_utf8(relaxed.stdout).unwrap().contains("unknown"));
    assert_eq!(run(&["lgf", p, "--bound", "0", "--strict"]).status.code(), Some(2));
    assert_eq!(run(&["lgf", p, "--strict"]).status.code(), Some(0));
}

#[test]
fn verify_is_independent_of_the_worker_count() {
    let nodal = example("nodal_cubic.json");
    let one = run(&["verify", &nodal, "--samples", "40", "--format", "json"]);
    let four = run(&["verify", &nodal, "--samples", "40", "--jobs", "4", "--format", "json"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let doc: Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(doc["result"]["status"], "pass");
    let names: Vec<&str> =
        doc["result"]["suites"].as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["staircase", "grid", "newton", "twin"]);
}

#[test]
fn golden_outputs() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden");
    let cases = [
        ("tropvar_series.json", vec!["tropvar", "truncated_series.json", "--format", "json"]),
        ("staircase_series.txt", vec!["staircase", "truncated_series.json"]),
        ("tropvar_series.svg", vec!["tropvar", "truncated_series.json", "--format", "svg"]),
    ];
    for (file, args) in cases {
        let out =
            bin().current_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("examples")).args(&args).output().unwrap();
        assert!(out.status.success());
        let want = std::fs::read(golden.join(file)).expect("golden file present");
        assert_eq!(String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&want), "{file}");
    }
}
