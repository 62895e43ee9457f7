use std::process::Command;

use binvert_core::{FieldSpec, Lrs, Pipeline, Poly, QuadExt, Rat};
use serde_json::Value;

fn binvert(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_binvert"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let (code, stdout, stderr) = binvert(&all);
    assert_eq!(code, 0, "stderr: {stderr}");
    serde_json::from_str(&stdout).expect("valid JSON")
}

fn terms(v: &Value) -> Vec<String> {
    v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t.as_str().unwrap().to_string())
        .collect()
}

fn assert_report_schema(v: &Value) {
    let obj = v.as_object().expect("object");
    assert!(obj["command"].is_string());
    assert!(obj["ok"].is_boolean());
    assert!(obj["terms"]
        .as_array()
        .unwrap()
        .iter()
        .all(Value::is_string));
    for step in obj["steps"].as_array().unwrap() {
        let step = step.as_object().unwrap();
        assert!(step["op"].is_string());
        assert!(step["char_poly"].is_string() || step["char_poly"].is_null());
    }
}

#[test]
fn transform_fibonacci_text() {
    let (code, out, _) = binvert(&[
        "transform",
        "--pipeline",
        "I(1) . rho . I(1)",
        "--input",
        "startsequence",
        "--count",
        "10",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("terms: 0, 1, 1, 2, 3, 5, 8, 13, 21, 34\n"));
    assert!(out.contains("char_poly: t^2 - t - 1\n"));
}

#[test]
fn eval_text() {
    let (code, out, _) = binvert(&["eval", "--poly", "t^2-t-1", "--init", "0,1", "--count", "5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("terms: 0, 1, 1, 2, 3\n"));
}

#[test]
fn transform_matches_library() {
    let cases = [
        ("I(1) . rho . I(1)", "startsequence", "Q"),
        ("L(-1/2) . I(3/2)", "impulse:t^3 - 2t + 5", "Q"),
        ("sigma . L(2) . rho . I(-1)", "impulse:t^2 - t - 1", "Q"),
        (
            "L(sqrt(5)) . sigma . L(-(1+sqrt(5))/2)",
            "impulse:t^2 - t - 1",
            "Q(sqrt 5)",
        ),
    ];
    for (pipe, input, field) in cases {
        let v = json(&[
            "transform",
            "--pipeline",
            pipe,
            "--input",
            input,
            "--field",
            field,
            "--count",
            "15",
        ]);
        assert_report_schema(&v);
        let spec: FieldSpec = field.parse().unwrap();
        let start = |s: &str| s.strip_prefix("impulse:").map(|p| p.to_string());
        let expected: Vec<String> = match spec {
            FieldSpec::Rational => {
                let p = Pipeline::<Rat>::parse_in(pipe, spec).unwrap();
                let s = match start(input) {
                    Some(f) => Lrs::impulse(f.parse::<Poly<Rat>>().unwrap()).unwrap(),
                    None => Lrs::startsequence(),
                };
                p.apply(&s)
                    .terms(15)
                    .iter()
                    .map(ToString::to_string)
                    .collect()
            }
            FieldSpec::Quadratic(_) => {
                let p = Pipeline::<QuadExt>::parse_in(pipe, spec).unwrap();
                let f = Poly::<QuadExt>::parse_in(&start(input).unwrap(), spec).unwrap();
                let s = Lrs::impulse(f).unwrap();
                p.apply(&s)
                    .terms(15)
                    .iter()
                    .map(ToString::to_string)
                    .collect()
            }
        };
        assert_eq!(terms(&v), expected, "{pipe} on {input}");
        assert_eq!(
            v["steps"].as_array().unwrap().len(),
            pipe.split('.').count()
        );
    }
}

#[test]
fn left_to_right_flag() {
    let a = json(&[
        "transform",
        "--pipeline",
        "I(2) . rho",
        "--input",
        "impulse:t^2-t-1",
    ]);
    let b = json(&[
        "transform",
        "--pipeline",
        "rho . I(2)",
        "--input",
        "impulse:t^2-t-1",
        "--left-to-right",
    ]);
    assert_eq!(terms(&a), terms(&b));
    assert_eq!(a["steps"][0]["op"], "rho");
}

#[test]
fn literal_input_runs_on_streams() {
    let v = json(&[
        "transform",
        "--pipeline",
        "L(-1)",
        "--input",
        "literal:0,1,4,9,16,25",
    ]);
    assert_report_schema(&v);
    assert_eq!(terms(&v), ["0", "1", "2", "0", "0", "0"]);
    assert!(v["steps"][0]["char_poly"].is_null());
}

#[test]
fn sqrt_needs_quadratic_field() {
    let (code, _, err) = binvert(&["transform", "--pipeline", "L(1+1*sqrt(5))"]);
    assert_eq!(code, 2);
    assert!(err.contains("not an element of Q"), "{err}");
    let (code, _, _) = binvert(&[
        "transform",
        "--pipeline",
        "L(1+1*sqrt(5))",
        "--field",
        "Q(sqrt 5)",
    ]);
    assert_eq!(code, 0);
}

#[test]
fn parse_errors_exit_nonzero() {
    let (code, _, err) = binvert(&["transform", "--pipeline", "I(1) . tau"]);
    assert_eq!(code, 2);
    assert!(err.contains("position 7"), "{err}");
    let (code, _, _) = binvert(&["transform", "--pipeline", "I(1)", "--input", "bogus"]);
    assert_eq!(code, 2);
    let (code, _, _) = binvert(&["eval", "--poly", "2t^2-1"]);
    assert_eq!(code, 2);
}

#[test]
fn construct_and_deconstruct() {
    let c = json(&[
        "construct",
        "--mode",
        "l",
        "--zeros",
        "1,2,3",
        "--count",
        "6",
    ]);
    assert_report_schema(&c);
    assert_eq!(c["ok"], true);
    assert_eq!(c["char_poly"], "t^3 - 6*t^2 + 11*t - 6");
    assert_eq!(terms(&c), ["0", "0", "1", "6", "25", "90"]);

    let i = json(&["construct", "--mode", "I", "--coeffs", "1,1"]);
    assert_eq!(i["pipeline"], "I(1) . rho . I(1)");

    let d = json(&["deconstruct", "--mode", "i", "--poly", "t^3-t^2-t-1"]);
    assert_eq!(d["ok"], true);
    assert_eq!(d["char_poly"], "t");

    let q = json(&[
        "deconstruct",
        "--mode",
        "l",
        "--poly",
        "t^2-t-1",
        "--zeros",
        "(1+sqrt(5))/2,(1-sqrt(5))/2",
        "--field",
        "Q(sqrt 5)",
    ]);
    assert_eq!(q["ok"], true);
    let (code, _, _) = binvert(&[
        "deconstruct",
        "--mode",
        "l",
        "--poly",
        "t^2-3t+2",
        "--zeros",
        "1,3",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "fib-antimean", "--n", "10"],
        vec!["verify", "rbonacci-ladder", "--r", "6"],
        vec!["verify", "rbonacci-ladder", "--r", "4", "--count", "25"],
        vec!["verify", "polygonal", "--q", "5"],
    ] {
        let (code, out, _) = binvert(&args);
        assert_eq!(code, 0, "{args:?}: {out}");
        let v = json(&args);
        assert_eq!(v["ok"], true);
        assert!(v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c["ok"] == true));
    }
    let (code, _, _) = binvert(&["verify", "polygonal", "--q", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn sequences() {
    let v = json(&["seq", "polygonal", "--q", "5", "--count", "20"]);
    assert_report_schema(&v);
    let expected: Vec<String> = (0..20i64)
        .map(|n| ((3 * n * n - n) / 2).to_string())
        .collect();
    assert_eq!(terms(&v), expected);
    let t = json(&["seq", "pyramidal", "--q", "3", "--d", "3", "--count", "5"]);
    assert_eq!(terms(&t), ["0", "1", "4", "10", "20"]);
    let r = json(&["seq", "rbonacci", "--r", "4", "--count", "8"]);
    assert_eq!(terms(&r), ["0", "0", "0", "1", "1", "2", "4", "8"]);
}

#[test]
fn tables() {
    let (_, out, _) = binvert(&["table", "stirling", "--n", "4"]);
    assert_eq!(out, "1\n0 1\n0 1 1\n0 1 3 1\n0 1 7 6 1\n");
    let s1 = json(&["table", "stirling", "--n", "3", "--first"]);
    assert_eq!(
        s1,
        serde_json::json!([["1"], ["0", "1"], ["0", "1", "1"], ["0", "2", "3", "1"]])
    );
    let b = json(&["table", "bell", "--values", "1,1,1"]);
    assert_eq!(b[3], serde_json::json!(["0", "1", "2", "1"]));
    let f = json(&["table", "figurate", "--k", "3", "--count", "5"]);
    assert_eq!(f[2], serde_json::json!(["0", "1", "3", "6", "10"]));
    let d = json(&["table", "differences", "--values", "0,1,4,9"]);
    assert_eq!(
        d,
        serde_json::json!([["0", "1", "4", "9"], ["1", "3", "5"], ["2", "2"], ["0"]])
    );
}
