use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str], config: Option<&std::path::Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_maminda"));
    cmd.args(args).env_remove("GFT_CONFIG");
    if let Some(p) = config {
        cmd.env("GFT_CONFIG", p);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn all_finite(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.as_f64().is_some_and(f64::is_finite),
        Value::Null => false,
        Value::Array(xs) => xs.iter().all(all_finite),
        Value::Object(m) => m.values().all(all_finite),
        _ => true,
    }
}

#[test]
fn k_starlike_radius() {
    let o = run(&["radius", "--problem", "k-starlike", "--k", "1"], None);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["equationId"], "root1");
    assert!((v["root"].as_f64().unwrap() - 0.462117).abs() < 1e-6);
}

#[test]
fn h3_at_alpha_zero_is_the_sl_star_bound() {
    let o = run(&["bound", "--class", "sl", "--alpha", "0", "--which", "h3"], None);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["caseLabel"], "sl-star");
    assert!((v["value"].as_f64().unwrap() - 1.0 / 9.0).abs() < 1e-15);
}

#[test]
fn curves_csv() {
    let o = run(&["curves", "--id", "tau", "--samples", "4"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.split("\r\n").filter(|l| !l.is_empty()).collect();
    assert_eq!(rows[0], "re,im");
    assert_eq!(rows.len(), 5);
    for r in &rows[1..] {
        let f: Vec<f64> = r.split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|x| x.is_finite()));
    }
}

#[test]
fn json_output_is_finite_and_idempotent() {
    let cases: [&[&str]; 8] = [
        &["radius", "--problem", "convex", "--alpha", "0.25"],
        &["radius", "--problem", "inclusion"],
        &["bound", "--class", "sl", "--alpha", "0.5", "--which", "h2"],
        &["bound", "--class", "sl", "--alpha", "0.5", "--which", "a4"],
        &["bound", "--class", "sl", "--alpha", "1/2", "--which", "h3", "--exact"],
        &["extremal", "--phi", "psi", "--n", "1", "--order", "8", "--exact"],
        &["verify", "--suite", "membership", "--seed", "42", "--samples", "20", "--json"],
        &["classify", "--phi", "sqrt_1_plus_z"],
    ];
    for args in cases {
        let a = run(args, None);
        assert!(a.status.success(), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
        assert!(all_finite(&v), "{args:?}");
        assert_eq!(a.stdout, run(args, None).stdout, "{args:?}");
    }
}

#[test]
fn extremal_coefficients() {
    let o = run(&["extremal", "--phi", "psi", "--n", "1", "--order", "8", "--exact"], None);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exact"][3], "-19/36");
    assert_eq!(v["coefficients"].as_array().unwrap().len(), 8);
}

#[test]
fn usage_and_computation_errors() {
    assert_eq!(run(&["nonsense"], None).status.code(), Some(2));
    assert_eq!(run(&["radius", "--problem", "warp"], None).status.code(), Some(2));
    assert_eq!(run(&["radius", "--problem", "convex", "--alpha", "2"], None).status.code(), Some(1));
    assert_eq!(run(&["extremal", "--phi", "tan"], None).status.code(), Some(1));
    assert_eq!(run(&["bound", "--class", "sl", "--alpha", "3", "--which", "h2"], None).status.code(), Some(1));
}

#[test]
fn config_precedence() {
    let dir = std::env::temp_dir().join(format!("maminda-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("config");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "truncationOrder = 10\nformat = text").unwrap();
    drop(f);

    let o = run(&["extremal", "--phi", "psi"], Some(&path));
    assert!(stdout(&o).contains("order = 10"), "{}", stdout(&o));
    let o = run(&["extremal", "--phi", "psi", "--order", "12", "--format", "json"], Some(&path));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 12);
    let o = run(&["extremal", "--phi", "psi"], None);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 32);

    std::fs::write(&path, "truncationOrder = 3\n").unwrap();
    assert_eq!(run(&["extremal"], Some(&path)).status.code(), Some(2));
    std::fs::write(&path, "shade = blue\n").unwrap();
    assert_eq!(run(&["extremal"], Some(&path)).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
