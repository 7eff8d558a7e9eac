//! End-to-end behavior of the binary: output shapes, formats, exit codes.

use std::io::Write;
use std::process::{Command, Output};

fn whitney(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whitney"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn eval_prints_paper_f_vector() {
    let out = whitney(&["eval", "K(4)*Star(4)", "--fvector"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("(20, 94, 212, 277, 224, 112, 32, 4)"));
}

#[test]
fn eval_prints_curvatures_in_lowest_terms() {
    let out = whitney(&["eval", "K(4)", "--curvature"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("= 1/4").count(), 4);
}

#[test]
fn eval_supports_every_invariant_flag() {
    let out = whitney(&[
        "eval",
        "K(2)*K(2)-C(4)",
        "--fvector",
        "--chi",
        "--curvature",
        "--betti",
        "--wu",
        "--indices",
        "--seed",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("chi: 1"));
    assert!(text.contains("betti: (0, -1)"));
    assert!(text.contains("index sum: 1 (chi 1)"));
}

#[test]
fn json_output_is_valid_json() {
    let out = whitney(&["eval", "C(4)", "--chi", "--betti", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["chi"], serde_json::json!(0));
    assert_eq!(doc["betti"], serde_json::json!([1, 1]));
    assert_eq!(doc["terms"][0]["graph"]["vertices"].as_array().unwrap().len(), 4);
}

#[test]
fn csv_output_has_header_and_rows() {
    let out = whitney(&["eval", "K(3)", "--curvature", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("section,term,key,value\n"));
    assert!(text.contains("curvature,0,1,1/3"));
}

#[test]
fn syntax_error_exits_two_with_offset() {
    let out = whitney(&["eval", "K("]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("offset 2"));
    assert!(stderr(&out).contains("integer"));
}

#[test]
fn unknown_flag_exits_two() {
    let out = whitney(&["eval", "K(3)", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_suite_exits_two() {
    let out = whitney(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("theorem1"));
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = whitney(&["eval", "K(30)", "--fvector"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("budget"));
}

#[test]
fn custom_budget_is_honored() {
    let out = whitney(&["eval", "K(6)", "--fvector", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(3));
    let out = whitney(&["eval", "K(6)", "--fvector", "--budget", "100"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_small_suite_exits_zero() {
    let out = whitney(&["verify", "gauss-bonnet", "--random", "4", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("gauss-bonnet: PASS"));
}

#[test]
fn verify_json_reports_cases() {
    let out = whitney(&[
        "verify",
        "wu-product",
        "--random",
        "2",
        "--seed",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["suite"], "wu-product");
    assert_eq!(doc["passed"], true);
}

#[test]
fn load_generator_reads_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("square.json");
    std::fs::write(
        &json_path,
        r#"{"vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","d"],["d","a"]]}"#,
    )
    .unwrap();
    let expr = format!("load(\"{}\")", json_path.display());
    let out = whitney(&["eval", &expr, "--chi", "--betti"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("chi: 0"));
    assert!(text.contains("betti: (1, 1)"));

    let edges_path = dir.path().join("tri.txt");
    let mut f = std::fs::File::create(&edges_path).unwrap();
    writeln!(f, "x y\ny z\nz x").unwrap();
    let expr = format!("load(\"{}\")", edges_path.display());
    let out = whitney(&["eval", &expr, "--chi"]);
    assert!(stdout(&out).contains("chi: 1"));

    let out = whitney(&["eval", "load(\"/no/such/file.json\")"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lefschetz_endomorphism_from_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rot.json");
    std::fs::write(&path, r#"{"1":"2","2":"3","3":"4","4":"1"}"#).unwrap();
    let out = whitney(&[
        "eval",
        "C(4)",
        "--lefschetz-endo",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("lefschetz: 0 fixed-simplex sum: 0 equal: true"));

    // incompatible map is a usage error
    std::fs::write(&path, r#"{"1":"1","2":"3","3":"1","4":"3"}"#).unwrap();
    let out = whitney(&[
        "eval",
        "C(4)",
        "--lefschetz-endo",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn expectation_requires_single_graph() {
    let out = whitney(&["expectation", "K(1)+K(1)", "--samples", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let out = whitney(&["expectation", "K(3)", "--samples", "50", "--seed", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("curvature 1/3"));
    assert!(text.contains("stderr"));
}

#[test]
fn identical_seeds_give_identical_output() {
    let a = whitney(&["verify", "wu-product", "--random", "3", "--seed", "6"]);
    let b = whitney(&["verify", "wu-product", "--random", "3", "--seed", "6"]);
    assert_eq!(a.stdout, b.stdout);
    let c = whitney(&["verify", "wu-product", "--random", "3", "--seed", "7"]);
    assert_ne!(a.stdout, c.stdout);
}
