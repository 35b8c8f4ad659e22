use lascoux_cli::run;
use serde_json::Value;

fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("lascoux").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn stdout(args: &[&str], stdin: &str) -> String {
    let (code, out, err) = call(args, stdin);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn atoms_and_polynomials() {
    assert_eq!(stdout(&["atom", "210"], ""), "x1^2*x2\n");
    assert_eq!(stdout(&["atom", "120"], ""), "x1*x2^2 + b*x1^2*x2^2\n");
    assert_eq!(stdout(&["atom", "--beta0", "120"], ""), "x1*x2^2\n");
    assert_eq!(stdout(&["lascoux-atom", "--method", "operators", "120"], ""), "x1*x2^2 + b*x1^2*x2^2\n");
    assert_eq!(stdout(&["schur", "1", "--vars", "2"], ""), "x1 + x2\n");
    assert_eq!(stdout(&["grothendieck", "1", "--vars", "2"], ""), "x1 + x2 + b*x1*x2\n");
}

#[test]
fn json_polynomial_round_trips_through_expand() {
    let json = stdout(&["--json", "atom", "021"], "");
    let v: Value = serde_json::from_str(&json).unwrap();
    assert!(v.is_object());
    let e: Value = serde_json::from_str(&stdout(&["expand", "--basis", "lascoux"], &json)).unwrap();
    assert_eq!(e.as_array().unwrap().len(), 1);
    assert_eq!(e[0]["gamma"], serde_json::json!([0, 2, 1]));
}

#[test]
fn classification_text() {
    assert_eq!(stdout(&["classify", "--vars", "3"], "x1"), "general positive\n");
    assert_eq!(stdout(&["classify"], "x1 + x2 + b*x1*x2"), "symmetric positive\n");
    assert_eq!(stdout(&["classify"], "x1 + x2"), "symmetric signed\n");
    assert_eq!(stdout(&["classify"], "x1 - x2"), "general signed\n");
}

#[test]
fn genomic_count() {
    assert_eq!(stdout(&["genomic-count", "102", "21", "314"], ""), "2\n");
    let v: Value = serde_json::from_str(&stdout(&["--json", "genomic-count", "102", "21", "314"], "")).unwrap();
    assert_eq!(v["count"], 2);
    assert_eq!(v["fillings"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["atom", "2x1"], "").0, 2);
    assert_eq!(call(&["nonsense"], "").0, 2);
    assert_eq!(call(&["classify"], "x1 +* x2").0, 2);
    assert_eq!(call(&["expand", "--basis", "qgroth", "--vars", "2"], "x1").0, 2);
    assert_eq!(call(&["rho"], "{not json").0, 2);
    assert_eq!(call(&["verify", "figure1", "--jobs", "0"], "").0, 2);
    assert_eq!(call(&["--help"], "").0, 0);
}

#[test]
fn uncrowd_and_crowd_are_inverse() {
    let t = r#"{"outer":[3,1],"inner":[],"convention":"increasing","rows":[[[1],[4,2,1],[4]],[[5,4]]]}"#;
    let pair = stdout(&["uncrowd"], t);
    assert_eq!(stdout(&["crowd"], &pair).trim(), t);
}

fn without_time(report: &str) -> Value {
    let mut v: Value = serde_json::from_str(report).unwrap();
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v
}

#[test]
fn verify_reports_are_deterministic_across_job_counts() {
    for check in ["figure1", "bases", "rho"] {
        let one = without_time(&stdout(&["--json", "verify", check, "--jobs", "1"], ""));
        let four = without_time(&stdout(&["--json", "verify", check, "--jobs", "4"], ""));
        assert_eq!(one, four, "{check}");
        assert_eq!(one["failures"], serde_json::json!([]));
    }
}
