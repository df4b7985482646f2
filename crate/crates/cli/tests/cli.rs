use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_disk-sharp"))
        .args(args)
        .env_remove("DISK_SHARP_TOL")
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_disk-sharp"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_line(o: &Output) -> String {
    stdout(o).lines().next().unwrap_or_default().to_string()
}

#[test]
fn constant_examples() {
    let o = run(&["constant", "--quantity", "Cp_global", "--p", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o), "0.7978845608");
    assert!(stdout(&o).contains("method: quadrature"));

    let o = run(&["constant", "--quantity", "cp_global", "--p", "inf"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o).parse::<f64>().unwrap(), 1.0);

    let o = run(&["constant", "--quantity", "Cp_at_z", "--p", "2", "--r", "0"]);
    assert_eq!(first_line(&o), "0.5641895835");
}

#[test]
fn constant_json() {
    let o = run(&["constant", "--quantity", "cp_at_r", "--p", "2", "--r", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["quantity"], "cp_at_r");
    assert!((v["value"].as_f64().unwrap() - 0.3989422804).abs() < 1e-10);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["constant", "--quantity", "Cp_at_z", "--p", "2"]).status.code(), Some(2));
    assert_eq!(run(&["constant", "--p", "0.5"]).status.code(), Some(2));
    assert_eq!(run(&["constant", "--quantity", "nonsense", "--p", "2"]).status.code(), Some(2));
    assert_eq!(run(&["constant", "--quantity", "Cp_at_z", "--p", "2", "--r", "1"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--quantity", "Cp_global", "--steps", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nothing"]).status.code(), Some(2));
}

#[test]
fn tolerance_from_environment() {
    let o = run_env(&["constant", "--quantity", "Cp_global", "--p", "3"], "DISK_SHARP_TOL", "1e-12");
    assert_eq!(o.status.code(), Some(0));
    let loose = run(&["constant", "--quantity", "Cp_global", "--p", "3"]);
    let a: f64 = first_line(&o).parse().unwrap();
    let b: f64 = first_line(&loose).parse().unwrap();
    assert!((a - b).abs() < 1e-9);
    let bad = run_env(&["constant", "--quantity", "Cp_global", "--p", "3"], "DISK_SHARP_TOL", "tight");
    assert_eq!(bad.status.code(), Some(2));
    let neg = run_env(&["constant", "--quantity", "Cp_global", "--p", "3"], "DISK_SHARP_TOL", "-1");
    assert_eq!(neg.status.code(), Some(2));
}

fn parse_csv(text: &str) -> Vec<(f64, f64)> {
    let mut lines = text.split("\r\n");
    assert_eq!(lines.next(), Some("p,value,method,error"));
    lines
        .filter(|l| !l.is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            assert_eq!(f.len(), 4);
            (f[0].parse().unwrap(), f[1].parse().unwrap())
        })
        .collect()
}

#[test]
fn global_sweep() {
    let args = ["sweep", "--quantity", "Cp_global", "--p-min", "1.05", "--p-max", "20", "--steps", "100"];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    let rows = parse_csv(&stdout(&a));
    assert_eq!(rows.len(), 100);
    let k = (0..rows.len()).min_by(|&i, &j| rows[i].1.total_cmp(&rows[j].1)).unwrap();
    assert!(rows[k - 1].0 <= 2.0 && 2.0 <= rows[k + 1].0, "minimum at p = {}", rows[k].0);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let seq = run(&["--jobs", "1", "sweep", "--quantity", "Cp_global", "--p-min", "1.05", "--p-max", "20", "--steps", "100"]);
    assert_eq!(a.stdout, seq.stdout);
}

#[test]
fn wirtinger_sweep_to_infinity() {
    let o = run(&["sweep", "--quantity", "cp_global", "--p-min", "2", "--p-max", "inf", "--steps", "20", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    let values: Vec<f64> = rows.iter().map(|r| r["value"].as_f64().unwrap()).collect();
    assert!(values.windows(2).all(|w| w[1] >= w[0]));
    assert_eq!(rows.last().unwrap()["p"], "inf");
    assert!((values.last().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn sweep_to_file() {
    let path = std::env::temp_dir().join(format!("disk-sharp-sweep-{}.csv", std::process::id()));
    let o = run(&["sweep", "--quantity", "cp_at_r", "--r", "0.5", "--steps", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(parse_csv(&text).len(), 5);
    std::fs::remove_file(path).unwrap();
}

fn verify(args: &[&str]) -> (Option<i32>, Value) {
    let mut full = vec!["verify"];
    full.extend_from_slice(args);
    let o = run(&full);
    let v = serde_json::from_str(&stdout(&o)).unwrap_or(Value::Null);
    (o.status.code(), v)
}

#[test]
fn verify_lemmas_crossover_prudnikov() {
    for suite in ["lemmas", "crossover", "prudnikov"] {
        let (code, v) = verify(&["--suite", suite]);
        assert_eq!(code, Some(0), "{suite}");
        assert_eq!(v["passed"], true);
        assert_eq!(v["suite"], suite);
        for r in v["reports"].as_array().unwrap() {
            assert_eq!(r["failures"], 0);
            assert!(r["cells"].as_array().unwrap().is_empty());
        }
    }
}

#[test]
fn verify_fuzz_is_reproducible() {
    let args = ["--suite", "fuzz", "--seed", "42", "--trials", "1000", "--p", "2"];
    let (code, a) = verify(&args);
    assert_eq!(code, Some(0));
    assert_eq!(a["passed"], true);
    let (_, b) = verify(&args);
    assert_eq!(a, b);
}

#[test]
fn verify_sharpness_at_two() {
    let path = std::env::temp_dir().join(format!("disk-sharp-sharp-{}.json", std::process::id()));
    let o = run(&["verify", "--suite", "sharpness", "--p", "2", "--full", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(path).unwrap();
    let cells = v["reports"][0]["cells"].as_array().unwrap();
    assert!(!cells.is_empty());
    assert!(cells.iter().all(|c| c["pass"] == true));
}
