use std::process::{Command, Output};

use degbell_core::ring::parse_rational;
use degbell_core::LambdaPoly;
use serde_json::Value;

fn degbell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degbell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = degbell(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn usage_error(args: &[&str]) -> String {
    let out = degbell(args);
    assert_eq!(out.status.code(), Some(2), "{args:?}");
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.trim_end().lines().count(), 1, "one-line diagnostic: {err}");
    err
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&["eval", "central-factorial2", "--n", "2", "--k", "1", "--lambda", "sym"]), "-1*L\n");
    assert_eq!(stdout(&["eval", "stirling1", "--n", "3", "--k", "3"]), "1\n");
    assert_eq!(stdout(&["eval", "central-complete", "--n", "2", "--xs", "1,1", "--lambda", "1/2"]), "1/2\n");
    assert_eq!(stdout(&["eval", "bell-central-deg", "--n", "2", "--x", "-1/2"]), "1/4 + 1/2*L\n");
    assert_eq!(stdout(&["eval", "stirling1", "--n", "3", "--k", "1"]), "2\n");
}

#[test]
fn eval_json_carries_coefficients() {
    let text = stdout(&["eval", "central-factorial2", "--n", "3", "--k", "2", "--format", "json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["family"], "central-factorial2");
    assert_eq!(v["rows"][0]["value"], serde_json::json!(["0/1", "-3/1"]));
}

#[test]
fn rational_lambda_matches_symbolic_evaluation() {
    let cases: [&[&str]; 4] = [
        &["eval", "central-incomplete", "--n", "5", "--k", "2", "--xs", "1/2,-3,2,7/5"],
        &["eval", "complete-deg", "--n", "4", "--xs", "2,-1/3,1,5"],
        &["eval", "stirling2-deg", "--n", "6", "--k", "3"],
        &["eval", "bell-deg", "--n", "4", "--x", "3/2"],
    ];
    for args in cases {
        let sym: LambdaPoly = stdout(args).trim().parse().unwrap();
        for l in ["1/3", "-2", "0"] {
            let mut with = args.to_vec();
            with.extend(["--lambda", l]);
            let val = parse_rational(stdout(&with).trim()).unwrap();
            assert_eq!(val, sym.eval(&parse_rational(l).unwrap()), "{with:?}");
        }
    }
}

#[test]
fn usage_errors_have_distinct_messages() {
    let unknown = usage_error(&["eval", "stirling3", "--n", "2", "--k", "1"]);
    let shape = usage_error(&["eval", "incomplete", "--n", "3", "--k", "1", "--xs", "1,2"]);
    let rational = usage_error(&["eval", "stirling1", "--n", "2", "--k", "1", "--lambda", "1/0"]);
    assert!(unknown.contains("unknown family"));
    assert!(shape.contains("needs exactly 3"));
    assert!(rational.contains("invalid --lambda"));
    assert!(usage_error(&["eval", "stirling1", "--n", "2"]).contains("needs --k"));
    assert!(usage_error(&["eval", "bell-deg", "--n", "2", "--k", "1"]).contains("does not take --k"));
    assert!(usage_error(&["eval", "stirling1", "--n", "2", "--k", "1", "--xs", "1"]).contains("--xs"));
    assert!(usage_error(&["eval", "complete-deg", "--n", "2", "--xs", "1,x"]).contains("invalid rational"));
    assert!(usage_error(&["table", "incomplete", "--n-max", "3", "--xs", "1,2"]).contains("at least 4"));
}

#[test]
fn table_uses_prefixes_of_xs() {
    let text = stdout(&["table", "central-complete", "--n-max", "2", "--xs", "3,5,7", "--format", "csv"]);
    // x₁² − λx₂ at (3, 5)
    assert_eq!(text, "n,k,value\n0,,1\n1,,3\n2,,9 - 5*L\n");
    let ones = stdout(&["table", "incomplete-deg", "--n-max", "3", "--format", "csv"]);
    let s2 = stdout(&["table", "stirling2-deg", "--n-max", "3", "--format", "csv"]);
    assert_eq!(ones, s2);
}

#[test]
fn plain_table_and_out_file() {
    let text = stdout(&["table", "bell-deg", "--n-max", "2"]);
    assert_eq!(text, "n=0: 1\nn=1: 1\nn=2: 2 - 1*L\n");
    let dir = std::env::temp_dir().join(format!("degbell-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.json");
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["table", "stirling1", "--n-max", "3", "--format", "json", "--out", p]), "");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 10);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn io_errors_exit_three() {
    let out = degbell(&["table", "stirling1", "--n-max", "1", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(out.status.code(), Some(3));
    let out = degbell(&["verify", "--n-max", "1", "--out", "/nonexistent-dir/r.json"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_with_sampled_lambda() {
    let out = degbell(&["verify", "--n-max", "4", "--seed", "2", "--lambda", "1/2,-3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["grid"]["lambda_mode"], "samples:1/2,-3/1");
    assert!(v.as_array().unwrap().iter().all(|r| r["status"] == "pass"));
}

#[test]
fn verify_is_deterministic() {
    let a = degbell(&["verify", "--n-max", "5", "--seed", "9"]);
    let b = degbell(&["verify", "--n-max", "5", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
}
