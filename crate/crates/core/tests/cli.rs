use std::fs;
use std::process::Command;

use inforcer::cli::{run, Outcome};

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("inforcer").chain(args.iter().copied()))
}

#[test]
fn binary_matches_in_process_run() {
    let args = ["compute", "--measure", "shannon", "--p", "0.5,0.5"];
    let out = Command::new(env!("CARGO_BIN_EXE_inforcer")).args(args).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1.0\n");

    let out = Command::new(env!("CARGO_BIN_EXE_inforcer"))
        .args(["compute", "--measure", "tsallis", "--gamma", "1", "--p", "0.5,0.5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error[ConstraintViolation]: "));
}

#[test]
fn distribution_sources() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("p.csv");
    fs::write(&csv, "p\n0.5\n0.5\n").unwrap();
    let json = dir.path().join("p.json");
    fs::write(&json, "[0.5, 0.6]").unwrap();
    let (csv, json) = (csv.to_str().unwrap(), json.to_str().unwrap());

    assert_eq!(cli(&["compute", "--measure", "shannon", "--p", csv]).stdout, "1.0\n");
    let out = cli(&["compute", "--measure", "shannon", "--p", json]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.starts_with("error[NotNormalized]"));
    let out = cli(&["compute", "--measure", "shannon", "--p", json, "--renormalize", "--format", "json"]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let (a, b) = (5.0f64 / 11.0, 6.0f64 / 11.0);
    let want = -(a * a.log2() + b * b.log2());
    assert!((v["value"].as_f64().unwrap() - want).abs() < 1e-11);
    assert_eq!(cli(&["compute", "--measure", "shannon", "--p", "0.2,0.3,0.5"]).code, 0);
    assert_eq!(fs::read_to_string(json).unwrap(), "[0.5, 0.6]");
}

#[test]
fn json_output_fields() {
    let out = cli(&["compute", "--measure", "tsallis", "--gamma", "2", "--p", "0.5,0.5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["measure"], "tsallis");
    assert_eq!(v["value"], 0.5);
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["engine"]["tau"], -1.0);
    assert_eq!(v["engine"]["lambda"], -1.0);
    assert_eq!(v["engine"]["c"], -1.0);
    assert_eq!(v["engine"]["e"], -1.0);

    let out = cli(&["compute", "--family", "inaccuracy", "--tau", "-1", "--lambda", "0.5", "--p", "0.5,0.5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["measure"], "raw");
    assert_eq!(v["engine"]["lambda"], 0.5);
    assert!(v["engine"]["c"].is_null());
}

#[test]
fn external_weights_and_utilities() {
    let out = cli(&["compute", "--measure", "kerridge", "--p", "0.5,0.5", "--u", "1,0"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "1.0\n"));
    let out = cli(&["compute", "--measure", "kerridge", "--p", "0.5,0.5"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("error[MissingInput]"));
    let out = cli(&["compute", "--measure", "khan_autar", "--alpha", "2", "--beta", "1", "--p", "0.25,0.75", "--util", "3,3"]);
    let renyi = cli(&["compute", "--measure", "renyi", "--alpha", "2", "--p", "0.25,0.75"]);
    assert_eq!(out.stdout, renyi.stdout);
    let out = cli(&["compute", "--measure", "rathie", "--alpha", "2", "--betas", "1,1", "--p", "0.25,0.75"]);
    assert_eq!(out.stdout, renyi.stdout);
}

#[test]
fn verify_and_dual_reports() {
    let out = cli(&["verify", "--measure", "onicescu", "--p", "0.2,0.8", "--q", "0.1,0.3,0.6", "--format", "csv"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "measure,check,lhs,rhs,abs_err,rel_err,tolerance,passed");
    assert!(lines[1].starts_with("onicescu,composability,") && lines[1].ends_with(",true"));

    let out = cli(&["verify", "--measure", "rathie", "--alpha", "2", "--betas", "1,2", "--p", "0.2,0.8", "--q", "0.5,0.5"]);
    assert_eq!(out.code, 1);
    let out = cli(&["verify", "--measure", "rathie", "--alpha", "2", "--betas", "1,2", "--betas-q", "1.5,1.5", "--p", "0.2,0.8", "--q", "0.5,0.5"]);
    assert_eq!(out.code, 0, "{}", out.stderr);

    let out = cli(&["verify", "--measure", "renyi", "--alpha", "2", "--p", "0.5,0.5", "--q", "0.5,0.5", "--tolerance", "0"]);
    assert_eq!(out.code, 1);

    let out = cli(&["dual", "--measure", "teodorescu", "--gamma", "3", "--p", "0.1,0.2,0.7", "--format", "json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["counterpart"], "renyi alpha=3.0");
}

#[test]
fn sweep_examples() {
    let out = cli(&["sweep", "--measure", "renyi", "--p", "0.2,0.8", "--param", "alpha", "--grid", "0.5,0.999,1.001,2"]);
    assert_eq!(out.code, 0);
    let rows: Vec<(String, f64)> = out
        .stdout
        .lines()
        .skip(1)
        .map(|l| {
            let (a, v) = l.split_once(',').unwrap();
            (a.to_string(), v.parse().unwrap())
        })
        .collect();
    assert_eq!(out.stdout.lines().next(), Some("alpha,value"));
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[1].0, "0.999");
    assert!((rows[1].1 - rows[2].1).abs() <= 1e-3);

    let out = cli(&["sweep", "--measure", "tsallis", "--p", "0.5,0.5", "--param", "gamma", "--grid", "2"]);
    assert_eq!(out.stdout, "gamma,value\n2,0.5\n");

    let out = cli(&["sweep", "--measure", "renyi", "--p", "0.5,0.5", "--param", "alpha", "--grid", ""]);
    assert_eq!(out.code, 1);
}

#[test]
fn output_is_deterministic() {
    let args = ["sweep", "--measure", "sharma_mittal_2", "--gamma", "0.5", "--p", "0.1,0.2,0.3,0.4", "--param", "alpha", "--grid", "0.25,0.5,0.75,1.5,2.5,4"];
    let first = cli(&args);
    for _ in 0..5 {
        assert_eq!(cli(&args), first);
    }
}

#[test]
fn usage_errors() {
    for args in [
        &["compute", "--measure", "shannon", "--p", "0.5,0.5", "--format", "xml"][..],
        &["compute", "--measure", "tsalis", "--gamma", "2", "--p", "0.5,0.5"],
        &["compute", "--measure", "shannon", "--family", "inaccuracy", "--p", "0.5,0.5"],
        &["compute", "--measure", "shannon", "--p", "missing/file.csv"],
        &["compute", "--measure", "renyi", "--alpha", "two", "--p", "0.5,0.5"],
        &["compute", "--measure", "onicescu", "--p", "0.5,0.5", "--nats"],
        &["sweep", "--measure", "renyi", "--p", "0.5,0.5", "--param", "alpha", "--grid", "1,1"],
        &["sweep", "--measure", "renyi", "--p", "0.5,0.5", "--param", "alpha", "--grid", "1,inf"],
    ] {
        let out = cli(args);
        assert_eq!(out.code, 1, "{args:?}: {out:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = cli(&["compute", "--measure", "tsalis", "--gamma", "2", "--p", "0.5,0.5"]);
    assert!(out.stderr.contains("did you mean: tsallis"), "{}", out.stderr);
}
