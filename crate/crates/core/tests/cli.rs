use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn data(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name]
        .iter()
        .collect();
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bilinear-hopf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn text_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_skew_form() {
    let out = run(&["analyze", "--file", &data("skew2.json"), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["cosemisimple"], json!(true));
    assert_eq!(v["antipode_order"], json!({ "finite": 2 }));
    assert_eq!(v["nu2"], json!("-1"));
    assert_eq!(
        v["input"]["matrix"]["matrix"],
        json!([["0", "-1"], ["1", "0"]])
    );
    assert_eq!(v["approx"]["precision_bits"], json!(64));
}

#[test]
fn built_in_examples() {
    let out = run(&["example", "prop2", "--m", "5", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = text_of(&out);
    assert!(text.contains("antipode_order:    10\n"), "{text}");
    assert!(text.contains("cosemisimple:      true\n"), "{text}");

    let v = json_of(&run(&["example", "example7", "--n", "5"]));
    assert_eq!(v["nu2"], json!("5"));
    assert_eq!(v["antipode_order"], json!({ "finite": 4 }));

    let v = json_of(&run(&["example", "remark5"]));
    assert_eq!(v["q_class"], json!("one"));
    assert!(v["antipode_order"]["infinite"].is_string());

    let v = json_of(&run(&["example", "remark4", "--m", "3"]));
    assert_eq!(v["antipode_order"], json!({ "finite": 6 }));
    assert_eq!(v["cotriangular_hint"], json!(true));
}

#[test]
fn text_and_json_agree() {
    for args in [
        vec!["example", "prop2", "--m", "7"],
        vec!["example", "remark4", "--m", "5"],
        vec!["example", "remark5"],
        vec!["example", "example7", "--n", "3"],
    ] {
        let v = json_of(&run(&args));
        let mut text_args = args.clone();
        text_args.extend(["--format", "text"]);
        let text = text_of(&run(&text_args));
        let field = |key: &str| {
            text.lines()
                .find_map(|l| l.strip_prefix(&format!("{key}:")))
                .map(|rest| rest.trim().to_string())
                .unwrap_or_else(|| panic!("{key} missing from {text}"))
        };
        assert_eq!(field("cosemisimple"), v["cosemisimple"].to_string());
        assert_eq!(
            field("cotriangular_hint"),
            v["cotriangular_hint"].to_string()
        );
        match &v["antipode_order"] {
            Value::Object(o) if o.contains_key("finite") => {
                assert_eq!(field("antipode_order"), o["finite"].to_string())
            }
            _ => assert!(field("antipode_order").starts_with("infinite")),
        }
        if let Some(nu2) = v["nu2"].as_str() {
            assert!(field("nu2").starts_with(nu2));
        }
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["example", "prop2", "--m", "8"],
        vec!["haar", "--file", &data("golden.json")],
        vec![
            "verify",
            "invariance",
            "--file",
            &data("skew2.json"),
            "--format",
            "text",
        ],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.status.code(), Some(0));
        assert_eq!(first.stdout, second.stdout);
    }
}

#[test]
fn haar_table() {
    let v = json_of(&run(&["haar", "--file", &data("skew2.json")]));
    assert_eq!(
        v["denominator"],
        json!({ "conductor": 1, "coeffs": { "0": "-2" } })
    );
    assert_eq!(v["nu2"], json!("-1"));
    assert_eq!(v["nu2_via_character"], json!("-1"));
    let moments = v["moments"].as_array().unwrap();
    assert_eq!(moments.len(), 16);
    let m = moments
        .iter()
        .find(|m| ["k", "l", "i", "j"].map(|key| m[key].as_u64()) == [1, 2, 2, 1].map(Some))
        .unwrap();
    assert_eq!(
        m["value"],
        json!({ "conductor": 1, "coeffs": { "0": "-1/2" } })
    );
}

#[test]
fn verify_commands() {
    let v = json_of(&run(&["verify", "axioms", "--file", &data("golden.json")]));
    for key in [
        "counit",
        "antipode_axiom",
        "s_preserves_ideal",
        "comult_compatible",
    ] {
        assert_eq!(v["checks"]["axioms"][key], json!("pass"), "{key}");
    }
    let v = json_of(&run(&[
        "verify",
        "invariance",
        "--file",
        &data("golden.json"),
        "--margin",
        "2",
    ]));
    assert_eq!(v["checks"]["invariance"]["right"], json!("pass"));
    assert_eq!(v["checks"]["invariance"]["left"], json!("pass"));
    assert_eq!(v["checks"]["invariance"]["tuples_checked"], json!(81));
}

#[test]
fn input_errors_exit_two() {
    let out = run(&["analyze", "--file", &data("singular.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["code"], json!("singular_matrix"));

    let out = run(&["analyze", "--file", &data("ragged.json")]);
    assert_eq!(out.status.code(), Some(2));
    let v = json_of(&out);
    assert_eq!(v["error"]["code"], json!("parse_error"));
    assert_eq!(v["error"]["field"], json!("matrix[1]"));

    let out = run(&["haar", "--file", &data("trace_zero.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        json_of(&out)["error"]["code"],
        json!("degenerate_denominator")
    );

    let out = run(&[
        "analyze",
        "--file",
        &data("ragged.json"),
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("matrix[1]"));

    assert_eq!(run(&["example", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        run(&["example", "remark5", "--m", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
}

#[test]
fn size_guard_exits_three() {
    let out = run(&["verify", "axioms", "--file", &data("identity5.json")]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json_of(&out)["error"]["code"], json!("unsupported_size"));
    let out = run(&[
        "verify",
        "invariance",
        "--file",
        &data("identity5.json"),
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn analysis_of_large_forms_is_not_guarded() {
    let out = run(&[
        "analyze",
        "--file",
        &data("identity5.json"),
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text_of(&out).contains("nu2:               1\n"));
}
