use std::io::Write;
use std::process::{Command, Output};

use degen::exact::parse_rat;
use degen::LambdaPoly;
use serde_json::Value;

fn degen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn rows(v: &Value) -> Vec<Vec<String>> {
    v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|c| c.as_str().unwrap().to_string()).collect())
        .collect()
}

#[test]
fn numbers_symbolic_bernoulli() {
    let out = degen(&["numbers", "bernoulli", "--nmax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["values"][3], "-1/4*L + 1/4*L^3");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["numbers", "foo"][..],
        &["numbers", "bernoulli", "--lambda", "0.5"],
        &["numbers", "bernoulli", "--lambda", "1/0"],
        &["matrix", "C"],
        &["numbers", "bernoulli", "--nmax", "100000"],
        &["matrix", "B", "--seed", "custom"],
    ] {
        let out = degen(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn lambda_substitution_commutes_with_construction() {
    let symbolic = json(&degen(&["matrix", "B", "--seed", "bernoulli", "--rows", "5"]));
    for q in ["0", "1/2", "-1"] {
        let concrete = json(&degen(&["matrix", "B", "--seed", "bernoulli", "--rows", "5", "--lambda", q]));
        let lambda = parse_rat(q).unwrap();
        for (srow, crow) in rows(&symbolic).iter().zip(rows(&concrete)) {
            for (s, c) in srow.iter().zip(crow) {
                let evaluated = s.parse::<LambdaPoly>().unwrap().eval_at(&lambda);
                assert_eq!(evaluated, parse_rat(&c).unwrap(), "lambda={q}");
            }
        }
    }
}

#[test]
fn custom_seed_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "1\n1/2*L\n0\n-1 + 1*L^2").unwrap();
    let path = file.path().to_str().unwrap();
    let out = degen(&["matrix", "A", "--seed", "custom", "--custom-file", path, "--rows", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(rows(&json(&out))[0][1], "1/2*L");

    let short = degen(&["matrix", "A", "--seed", "custom", "--custom-file", path, "--rows", "6"]);
    assert_eq!(short.status.code(), Some(2));

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "1\nsqrt(L)").unwrap();
    let out = degen(&["matrix", "B", "--seed", "custom", "--custom-file", bad.path().to_str().unwrap(), "--rows", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn verify_passes_and_fault_is_reported() {
    let out = degen(&["verify", "--nmax", "8", "--order", "8"]);
    assert_eq!(out.status.code(), Some(0));

    let name = "bernoulli: stirling sum = n!*[t^n] t/(e_lambda(t)-1)";
    let out = degen(&["verify", "--nmax", "8", "--order", "8", "--inject-fault", name]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    let report = json(&out);
    let failing: Vec<&Value> = report["records"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "FAIL")
        .collect();
    assert_eq!(failing.len(), 1, "{text}");
    assert_eq!(failing[0]["identity"], name);
}

#[test]
fn audit_is_deterministic_in_both_formats() {
    let a = degen(&["audit"]);
    let b = degen(&["audit"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let flat = degen(&["--format", "flat", "audit"]);
    let text = String::from_utf8(flat.stdout).unwrap();
    assert!(text.starts_with("#kind=audit_report"));
    assert!(text.lines().any(|l| l.starts_with("half_powers_B\t2\t0\t0\t1/2*L\t")));
}
