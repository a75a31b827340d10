//! End-to-end tests that drive the compiled binary the way a shell user
//! would: real files, real argv, real exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_goodsemi");

const NODE: &str = r#"{
  "format": "goodsemi/1",
  "kind": "semigroup",
  "s": 2,
  "gamma": [1, 1],
  "small": [[0, 0], [1, 1]]
}
"#;

const NODE_AS_IDEAL: &str = r#"{
  "format": "goodsemi/1",
  "kind": "ideal",
  "s": 2,
  "mu": [0, 0],
  "gamma": [1, 1],
  "small": [[0, 0], [1, 1]],
  "parent": "node.json"
}
"#;

const UPSET: &str = r#"{
  "format": "goodsemi/1",
  "kind": "ideal",
  "s": 2,
  "mu": [1, 1],
  "gamma": [1, 1],
  "small": [[1, 1]],
  "parent": "node.json"
}
"#;

const CUSP_PRODUCT: &str = r#"{
  "format": "goodsemi/1",
  "kind": "semigroup",
  "s": 2,
  "gamma": [2, 2],
  "small": [[0, 0], [0, 2], [2, 0], [2, 2]]
}
"#;

const CUSP345: &str = r#"{
  "format": "goodsemi/1",
  "kind": "semigroup",
  "s": 1,
  "gamma": [3],
  "small": [[0], [3]]
}
"#;

const LONELY_TERM: &str = r#"{
  "format": "goodsemi/1",
  "kind": "polynomial",
  "s": 1,
  "terms": [{"exp": [0], "coeff": -1}]
}
"#;

/// Small set with a missing meet: (1, 2) and (2, 1) are in, (1, 1) is not.
const BROKEN: &str = r#"{
  "format": "goodsemi/1",
  "kind": "semigroup",
  "s": 2,
  "gamma": [2, 2],
  "small": [[0, 0], [1, 2], [2, 1], [2, 2]]
}
"#;

fn workspace(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("goodsemi-cli-{tag}"));
    std::fs::create_dir_all(&dir).expect("create fixture dir");
    for (name, body) in [
        ("node.json", NODE),
        ("ideal.json", NODE_AS_IDEAL),
        ("inner.json", UPSET),
        ("prod.json", CUSP_PRODUCT),
        ("cusp345.json", CUSP345),
        ("poly.json", LONELY_TERM),
        ("broken.json", BROKEN),
    ] {
        std::fs::write(dir.join(name), body).expect("write fixture");
    }
    dir
}

fn goodsemi(dir: &Path, args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .current_dir(dir)
        .output()
        .expect("spawn the binary")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8(bytes.to_vec()).expect("utf-8 output")
}

#[test]
fn validate_accepts_a_good_semigroup() {
    let dir = workspace("validate-ok");
    let out = goodsemi(&dir, &["validate", "node.json"]);
    assert_eq!(code(&out), 0, "stderr: {}", text(&out.stderr));
    assert_eq!(
        text(&out.stdout),
        "ok: semigroup, s=2, gamma=(1, 1), 2 small elements\n"
    );
}

#[test]
fn validate_pinpoints_a_broken_staircase() {
    let dir = workspace("validate-bad");
    let out = goodsemi(&dir, &["validate", "broken.json"]);
    assert_eq!(code(&out), 3);
    let err = text(&out.stderr);
    assert!(
        err.starts_with("error: validation failed:"),
        "unexpected stderr: {err}"
    );
}

#[test]
fn missing_files_exit_with_the_io_code() {
    let dir = workspace("validate-missing");
    let out = goodsemi(&dir, &["validate", "no-such-file.json"]);
    assert_eq!(code(&out), 2);
    assert!(text(&out.stderr).starts_with("error: io error:"));
}

#[test]
fn garbage_json_reports_its_position() {
    let dir = workspace("validate-garbage");
    std::fs::write(dir.join("garbage.json"), "{\n  \"format\": !\n}\n").expect("write fixture");
    let out = goodsemi(&dir, &["validate", "garbage.json"]);
    assert_eq!(code(&out), 3);
    assert!(text(&out.stderr).starts_with("error: parse error at line 2"));
}

#[test]
fn clap_errors_use_the_usage_code() {
    let dir = workspace("usage");
    let out = goodsemi(&dir, &["frobnicate"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn render_draws_the_node_staircase() {
    let dir = workspace("render-ascii");
    let out = goodsemi(&dir, &["render", "node.json", "--window", "-1,-1,2,2"]);
    assert_eq!(code(&out), 0, "stderr: {}", text(&out.stderr));
    assert_eq!(text(&out.stdout), "..##\n..G#\n.M..\n....\n");
}

#[test]
fn render_svg_is_a_single_element() {
    let dir = workspace("render-svg");
    let out = goodsemi(
        &dir,
        &[
            "render",
            "node.json",
            "--window",
            "-1,-1,2,2",
            "--format",
            "svg",
        ],
    );
    assert_eq!(code(&out), 0);
    let svg = text(&out.stdout);
    assert!(svg.starts_with("<svg"), "unexpected prefix: {svg:.40}");
    assert!(svg.trim_end().ends_with("</svg>"));
}

#[test]
fn render_rejects_a_short_window() {
    let dir = workspace("render-window");
    let out = goodsemi(&dir, &["render", "node.json", "--window", "1,2,3"]);
    assert_eq!(code(&out), 2);
    assert!(text(&out.stderr).contains("--window expects 4 comma-separated integers"));
}

#[test]
fn render_refuses_non_geometric_documents() {
    let dir = workspace("render-poly");
    let out = goodsemi(&dir, &["render", "poly.json", "--window", "0,0,1,1"]);
    assert_eq!(code(&out), 3);
    assert!(text(&out.stderr).contains("cannot render a polynomial"));
}

#[test]
fn poincare_of_the_node_in_both_spellings() {
    let dir = workspace("poincare");
    let bare = goodsemi(&dir, &["poincare", "node.json"]);
    assert_eq!(code(&bare), 0, "stderr: {}", text(&bare.stderr));
    assert_eq!(text(&bare.stdout), "-1 + t1*t2\n");

    let explicit = goodsemi(&dir, &["poincare", "node.json", "ideal.json"]);
    assert_eq!(code(&explicit), 0);
    assert_eq!(text(&explicit.stdout), "-1 + t1*t2\n");
}

#[test]
fn poincare_json_is_an_interchange_document() {
    let dir = workspace("poincare-json");
    let out = goodsemi(&dir, &["poincare", "node.json", "--json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&text(&out.stdout)).expect("valid json");
    assert_eq!(doc["format"], "goodsemi/1");
    assert_eq!(doc["kind"], "polynomial");
    assert_eq!(doc["s"], 2);
    assert_eq!(
        doc["terms"],
        serde_json::json!([
            {"exp": [0, 0], "coeff": -1},
            {"exp": [1, 1], "coeff": 1},
        ])
    );
}

#[test]
fn symmetry_prints_the_five_verdicts() {
    let dir = workspace("symmetry");
    let out = goodsemi(&dir, &["symmetry", "node.json", "ideal.json"]);
    assert_eq!(code(&out), 0, "stderr: {}", text(&out.stderr));
    assert_eq!(
        text(&out.stdout),
        "condition i: true\n\
         condition ii: true\n\
         condition iii: true\n\
         condition iv: true\n\
         mirror identity: true\n"
    );
}

#[test]
fn distance_counts_the_single_step() {
    let dir = workspace("distance");
    let out = goodsemi(&dir, &["distance", "node.json", "ideal.json", "inner.json"]);
    assert_eq!(code(&out), 0, "stderr: {}", text(&out.stderr));
    assert_eq!(text(&out.stdout), "1\n");
}

#[test]
fn dual_reflects_the_upset_through_the_conductor() {
    let dir = workspace("dual");
    let out = goodsemi(&dir, &["dual", "node.json", "inner.json"]);
    assert_eq!(code(&out), 0, "stderr: {}", text(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&text(&out.stdout)).expect("valid json");
    assert_eq!(doc["kind"], "ideal");
    assert_eq!(doc["mu"], serde_json::json!([0, 0]));
    assert_eq!(doc["gamma"], serde_json::json!([0, 0]));
    assert_eq!(doc["small"], serde_json::json!([[0, 0]]));
    assert_eq!(doc["parent"]["kind"], "semigroup");
}

#[test]
fn mismatched_parents_are_rejected() {
    let dir = workspace("mismatch");
    let out = goodsemi(&dir, &["dual", "prod.json", "inner.json"]);
    assert_eq!(code(&out), 3);
    assert!(text(&out.stderr).contains("different parent semigroups"));
}

#[test]
fn canonical_of_the_cusp_fills_the_first_gap() {
    let dir = workspace("canonical");
    let out = goodsemi(&dir, &["canonical", "cusp345.json"]);
    assert_eq!(code(&out), 0, "stderr: {}", text(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&text(&out.stdout)).expect("valid json");
    assert_eq!(doc["kind"], "ideal");
    assert_eq!(doc["mu"], serde_json::json!([0]));
    assert_eq!(doc["gamma"], serde_json::json!([3]));
    assert_eq!(doc["small"], serde_json::json!([[0], [1], [3]]));
}

#[test]
fn search_is_deterministic_across_runs_and_workers() {
    let dir = workspace("search-det");
    let first = goodsemi(&dir, &["search", "--s", "1", "--gamma-max", "3"]);
    let second = goodsemi(&dir, &["search", "--s", "1", "--gamma-max", "3"]);
    let threaded = goodsemi(
        &dir,
        &["search", "--s", "1", "--gamma-max", "3", "--jobs", "2"],
    );
    for out in [&first, &second, &threaded] {
        assert_eq!(code(out), 0, "stderr: {}", text(&out.stderr));
        assert!(text(&out.stderr).contains("0 failures"));
    }
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, threaded.stdout);
}

#[test]
fn search_honors_the_budget_env() {
    let dir = workspace("search-budget");
    let out = Command::new(BIN)
        .args(["search", "--s", "1", "--gamma-max", "3"])
        .env("GOODSEMI_BUDGET", "1")
        .current_dir(&dir)
        .output()
        .expect("spawn the binary");
    assert_eq!(code(&out), 4);
    assert!(text(&out.stderr).contains("budget exceeded"));
}

#[test]
fn search_writes_the_report_when_asked() {
    let dir = workspace("search-out");
    let out = goodsemi(
        &dir,
        &[
            "search",
            "--s",
            "1",
            "--gamma-max",
            "2",
            "--out",
            "report.json",
        ],
    );
    assert_eq!(code(&out), 0, "stderr: {}", text(&out.stderr));
    assert!(out.stdout.is_empty());
    let body = std::fs::read_to_string(dir.join("report.json")).expect("report written");
    let doc: serde_json::Value = serde_json::from_str(&body).expect("valid json");
    assert_eq!(doc["kind"], "report");
    assert_eq!(doc["failures"], serde_json::json!([]));
}

#[test]
fn info_names_the_parent_of_an_ideal() {
    let dir = workspace("info");
    let out = goodsemi(&dir, &["info", "ideal.json"]);
    assert_eq!(code(&out), 0);
    let body = text(&out.stdout);
    assert!(body.starts_with("ideal, s=2, mu=(0, 0), gamma=(1, 1), 2 small elements\n"));
    assert!(body.contains("  parent: s=2, gamma=(1, 1)\n"));
    assert!(body.contains("  small (1, 1)\n"));
}
