use std::process::{Command, Output};

use qbinom::qcomb::{phi_closed, q_factorial, q_int};
use qbinom::verify::{expand_formula, expand_oracle};
use qbinom::{IntPolynomial, NcPolynomial, RationalFunction, Relations, SystemId};
use serde_json::Value;

fn qbinom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qbinom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap().trim_end().to_string()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = qbinom(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
    stdout(&out)
}

fn usage_error(args: &[&str]) -> String {
    let out = qbinom(args);
    assert_eq!(out.status.code(), Some(2), "{args:?}");
    assert!(out.stdout.is_empty());
    let err = stderr(&out);
    assert_eq!(err.trim_end().lines().count(), 1, "one-line diagnostic: {err}");
    err
}

#[test]
fn expand_text_example() {
    assert_eq!(
        ok(&["expand", "--system", "A", "--n", "2", "--format", "text"]),
        "b^2 + (1+q)·b·a + c + a^2"
    );
    assert_eq!(
        ok(&["expand", "--system", "A", "--n", "2", "--method", "oracle"]),
        "b^2 + (1+q)·b·a + c + a^2"
    );
}

#[test]
fn phi_example() {
    assert_eq!(ok(&["phi", "--beta", "2"]), "(1+q^2)/(1-q)");
    assert_eq!(ok(&["phi", "--beta", "2", "--route", "recursive"]), "(1+q^2)/(1-q)");
    assert_eq!(ok(&["phi", "--beta", "0"]), "1");
}

#[test]
fn verify_summary_line() {
    assert_eq!(
        ok(&["verify", "--suite", "lemma1", "--max-n", "8"]),
        "lemma1: 8/8 match"
    );
}

#[test]
fn verify_other_suites() {
    assert_eq!(ok(&["verify", "--suite", "phi", "--max-beta", "10"]), "phi: 11/11 pass");
    assert_eq!(
        ok(&["verify", "--suite", "identity", "--max-i", "5"]),
        "identity: 5/5 pass"
    );
    let json: Value = serde_json::from_str(&ok(&[
        "verify", "--suite", "lemma2", "--max-n", "3", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(json["summaries"][0]["suite"], "lemma2");
    assert_eq!(json["summaries"][0]["failures"], 0);
    assert_eq!(json["reports"].as_array().unwrap().len(), 3);
    assert_eq!(json["reports"][2]["system"], "B");
    assert_eq!(json["reports"][2]["match"], true);
}

#[test]
fn scalar_verbs() {
    assert_eq!(ok(&["qint", "--n", "3"]), "1+q+q^2");
    assert_eq!(ok(&["qint", "--n", "2", "--base", "2"]), "1+q^2");
    assert_eq!(ok(&["qfact", "--n", "3"]), "1+2q+2q^2+q^3");
    assert_eq!(ok(&["qfact", "--n", "0"]), "1");
    assert_eq!(
        ok(&["coeff", "--system", "A", "--alpha", "1", "--beta", "0", "--gamma", "1"]),
        "1+q"
    );
    assert_eq!(
        ok(&["coeff", "--system", "A-c0", "--alpha", "1", "--beta", "1", "--gamma", "0"]),
        "0"
    );
}

#[test]
fn normalize_verb() {
    assert_eq!(ok(&["normalize", "--system", "A", "--word", "ab"]), "(q)·b·a + c");
    assert_eq!(ok(&["normalize", "--system", "A", "--word", "bca"]), "b·c·a");
    assert_eq!(ok(&["normalize", "--system", "B", "--word", ""]), "1");
}

#[test]
fn json_round_trips() {
    let p: IntPolynomial = serde_json::from_str(&ok(&["qint", "--n", "5", "--format", "json"])).unwrap();
    assert_eq!(p, q_int(5, 1));
    let p: IntPolynomial =
        serde_json::from_str(&ok(&["qfact", "--n", "6", "--base", "2", "--format", "json"])).unwrap();
    assert_eq!(p, q_factorial(6, 2));
    let r: RationalFunction = serde_json::from_str(&ok(&["phi", "--beta", "7", "--format", "json"])).unwrap();
    assert_eq!(r, phi_closed(7));

    for (sys, n) in [("A", "4"), ("B", "3"), ("A-c0", "5"), ("B-xi0", "3")] {
        let id: SystemId = sys.parse().unwrap();
        let n_val: usize = n.parse().unwrap();
        let f: NcPolynomial =
            serde_json::from_str(&ok(&["expand", "--system", sys, "--n", n, "--format", "json"])).unwrap();
        assert_eq!(f, expand_formula(id, n_val));
        let o: NcPolynomial = serde_json::from_str(&ok(&[
            "expand", "--system", sys, "--n", n, "--method", "oracle", "--format", "json",
        ]))
        .unwrap();
        assert_eq!(o, expand_oracle(id, n_val));
    }

    let p: NcPolynomial = serde_json::from_str(&ok(&[
        "normalize",
        "--system",
        "B",
        "--word",
        "aacb",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(p, Relations::new(SystemId::B).normalize_word(&"aacb".parse().unwrap()));
}

#[test]
fn eval_tables() {
    let text = ok(&["eval", "--system", "A", "--n", "3", "--at-root", "3"]);
    assert_eq!(
        text.lines().count(),
        expand_formula::<qbinom::BigInt>(SystemId::A, 3).len()
    );

    let json: Value = serde_json::from_str(&ok(&[
        "eval",
        "--system",
        "A",
        "--n",
        "3",
        "--at-root",
        "3",
        "--format",
        "json",
    ]))
    .unwrap();
    let rows = json.as_array().unwrap();
    // the coefficient of b·a^2 is [3]_q, which vanishes at a primitive cube root of unity
    let ba2 = rows.iter().find(|r| r["word"] == "baa").unwrap();
    assert_eq!(ba2["kind"], "value");
    let v = &ba2["value"];
    let (re, im) = (v[0].as_f64().unwrap(), v[1].as_f64().unwrap());
    assert!(re.hypot(im) < 1e-12, "[3]_q at a cube root of unity: {re} {im}");

    let minus = ok(&["eval", "--system", "B", "--n", "2", "--at-root", "5", "--sign", "-"]);
    assert!(minus.lines().all(|l| !l.contains("NaN")));
}

#[test]
fn range_checks() {
    assert!(usage_error(&["eval", "--system", "A", "--n", "2", "--at-root", "2"]).contains("N must be ≥ 3"));
    assert!(usage_error(&["eval", "--at-root", "2"]).contains("N must be ≥ 3"));
    assert!(
        usage_error(&["coeff", "--system", "A", "--alpha", "-1", "--beta", "0", "--gamma", "0"]).contains("--alpha")
    );
    assert!(usage_error(&["expand", "--system", "A", "--n", "0"]).contains("--n"));
    assert!(usage_error(&["phi", "--beta", "x"]).contains("--beta"));
}

#[test]
fn bad_inputs_are_usage_errors() {
    assert!(
        usage_error(&["normalize", "--system", "A", "--word", "axb"]).contains("invalid generator 'x' at position 2")
    );
    assert!(usage_error(&["expand", "--system", "C", "--n", "2"]).contains("--system"));
    assert!(usage_error(&["expand", "--system", "A", "--n", "2", "--bogus"]).contains("--bogus"));
    assert!(usage_error(&["verify", "--suite", "nope"]).contains("--suite"));
    usage_error(&["frobnicate"]);
    usage_error(&[]);
}
