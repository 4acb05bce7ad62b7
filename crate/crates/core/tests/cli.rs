use std::process::Command;

use cb_identity::cli::{dispatch, Outcome, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
use cb_identity::exact::parse_rational;
use serde_json::Value;

fn run(args: &[&str]) -> Outcome {
    dispatch(std::iter::once("cbid").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut argv = args.to_vec();
    argv.extend(["--format", "json"]);
    let out = run(&argv);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("valid json")
}

fn looks_rational(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    let mut parts = body.splitn(2, '/');
    let digits = |p: &str| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit());
    parts.next().is_some_and(digits) && parts.next().is_none_or(digits)
}

/// Every rational-looking string re-parses and re-renders unchanged.
fn assert_round_trips(v: &Value) -> usize {
    match v {
        Value::String(s) if looks_rational(s) => {
            let q = parse_rational(s).unwrap_or_else(|e| panic!("{s}: {e}"));
            assert_eq!(q.to_string(), *s);
            1
        }
        Value::Array(items) => items.iter().map(assert_round_trips).sum(),
        Value::Object(map) => map.values().map(assert_round_trips).sum(),
        _ => 0,
    }
}

fn commands(signal: &str, sidecar: &str) -> Vec<Vec<String>> {
    let lines = [
        "cb verify --n 1 --m 1 --x 1/2",
        "cb verify --n 4 --m 3 --x -3/5",
        "cb sweep --max 4",
        "cb hering --m 3 --n 4 --x 7/2",
        "series demoivre --p 3 --n 5",
        "series demoivre --p 5 --n 2",
        "hyp pfaff --a -3 --b 1/2 --c 5/2 --z 1/3",
        "hyp hering --m 1/2 --n 3 --x -1/3",
        "hyp hering --m 2 --n 2 --x 3",
        "points share --needs 5,3 --p 1/2 --stake 64",
        "points multi --needs 1,2,2 --probs 1/3,1/3,1/3 --stake 27",
        "dice pepys --k-max 3",
        "dice g --faces 6 --n-max 5",
        "filter design --N 3 --n 1",
    ];
    let mut out: Vec<Vec<String>> = lines
        .iter()
        .map(|l| l.split_whitespace().map(String::from).collect())
        .collect();
    out.push(vec!["filter".into(), "apply".into(), "--N".into(), "2".into(), "--n".into(), "1".into(), "--input".into(), signal.into()]);
    out.push(
        ["filter", "response", "--N", "3", "--n", "1", "--samples", "8", "--unweighted", "--sidecar", sidecar]
            .map(String::from)
            .to_vec(),
    );
    out
}

#[test]
fn documented_verify_example() {
    let v = json(&["cb", "verify", "--n", "1", "--m", "1", "--x", "1/2"]);
    assert_eq!(v["results"]["first"], "1/2");
    assert_eq!(v["results"]["second"], "1/2");
    assert_eq!(v["results"]["sum"], "1");
    assert_eq!(v["verified"], true);
    assert_eq!(v["inputs"]["x"], "1/2");
}

#[test]
fn every_subcommand_verifies_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let signal = dir.path().join("signal.csv");
    std::fs::write(&signal, "value\n1\n4\n9\n16\n25\n36\n1/2\n").unwrap();
    let sidecar = dir.path().join("response.json");
    for argv in commands(signal.to_str().unwrap(), sidecar.to_str().unwrap()) {
        let args: Vec<&str> = argv.iter().map(String::as_str).collect();
        let v = json(&args);
        assert_eq!(v["verified"], true, "{args:?}");
        assert!(v["diagnostics"].as_array().unwrap().is_empty());
        assert!(assert_round_trips(&v) > 0, "{args:?} has no rationals");
        for format in ["text", "csv"] {
            let mut with = args.clone();
            with.extend(["--format", format]);
            assert_eq!(run(&with).code, EXIT_OK, "{with:?}");
        }
    }
    let side: Value = serde_json::from_str(&std::fs::read_to_string(&sidecar).unwrap()).unwrap();
    assert_eq!(side["P"], serde_json::json!(["3", "-2"]));
    assert_eq!(side["Q"], serde_json::json!(["1", "2"]));
    assert_round_trips(&side);
}

#[test]
fn pepys_table_decreases() {
    let v = json(&["dice", "pepys", "--k-max", "3"]);
    let values: Vec<_> = v["results"]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| parse_rational(s.as_str().unwrap()).unwrap())
        .collect();
    assert_eq!(values[0].to_string(), "31031/46656");
    assert!(values.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn csv_shape() {
    let out = run(&["points", "share", "--needs", "5,3", "--p", "1/2", "--format", "csv"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(!out.stdout.contains('\r'));
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "player,needs,chance,decimal,share");
    assert_eq!(lines[1], "pierre,5,29/128,0.226562500000000,29/128");
    assert_eq!(lines.len(), 3);
}

#[test]
fn filter_apply_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cubic.csv");
    let body: String = (0..9).map(|t: i64| format!("{}\n", t * t * t)).collect();
    std::fs::write(&path, body).unwrap();
    let v = json(&["filter", "apply", "--N", "2", "--n", "1", "--input", path.to_str().unwrap()]);
    let expect: Vec<Value> = (2..7).map(|t: i64| Value::String((t * t * t).to_string())).collect();
    assert_eq!(v["results"]["output"], Value::Array(expect));
}

#[test]
fn error_exit_codes() {
    assert_eq!(run(&["cb", "verify", "--n", "1", "--m", "1", "--x", "1/0"]).code, EXIT_USAGE);
    assert_eq!(run(&["cb", "frobnicate"]).code, EXIT_USAGE);
    assert_eq!(run(&["points", "share", "--needs", "5,3", "--p", "2.5/3"]).code, EXIT_USAGE);
    let unknown = run(&["bogus"]);
    assert_eq!(unknown.code, EXIT_USAGE);
    assert!(unknown.stderr.contains("Usage"));

    assert_eq!(run(&["points", "share", "--needs", "5,3", "--p", "3/2"]).code, EXIT_DOMAIN);
    assert_eq!(run(&["hyp", "hering", "--m", "1/2", "--n", "3", "--x", "1"]).code, EXIT_DOMAIN);
    assert_eq!(run(&["hyp", "hering", "--m", "2", "--n", "2", "--x", "1/2"]).code, EXIT_DOMAIN);
    assert_eq!(run(&["filter", "design", "--N", "3", "--n", "3"]).code, EXIT_DOMAIN);
    assert_eq!(run(&["filter", "apply", "--N", "2", "--n", "0", "--input", "/nonexistent/x.csv"]).code, EXIT_DOMAIN);
    assert_eq!(run(&["dice", "g", "--faces", "1", "--n-max", "4"]).code, EXIT_DOMAIN);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cbid");
    let ok = Command::new(bin).args(["dice", "pepys", "--k-max", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("31031/46656"));
    let bad = Command::new(bin).args(["cb", "verify", "--n", "1", "--m", "1", "--x", "1/0"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    assert!(!bad.stderr.is_empty());
}
