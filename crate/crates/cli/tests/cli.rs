use std::path::Path;
use std::process::{Command, Output};

fn fi_calc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fi-calc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_module(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let path_str = path.to_str().unwrap().to_string();
    let mut full: Vec<&str> = args.to_vec();
    full.extend(["-o", &path_str]);
    let o = fi_calc(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path_str
}

#[test]
fn gn_table() {
    let o = fi_calc(&["gn", "--n", "2", "--k", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("dimension 5"));
    assert!(out.contains("| (2,2) | 2 | 1 | 1 |"));
    assert!(out.contains("| (3,1) | 1 | 0 | - |"));
}

#[test]
fn kostka_value() {
    let o = fi_calc(&["kostka", "--lambda", "2,1", "--mu", "1,1,1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("\"K_{(2,1),(1,1,1)} = 2\",\"(2,1)\",\"(1,1,1)\",2"));
}

#[test]
fn usage_errors_exit_two() {
    let o = fi_calc(&["validate", "definitely-missing.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("validate"));
    assert_eq!(fi_calc(&["kostka", "--lambda", "1,2", "--mu", "3"]).status.code(), Some(2));
    assert_eq!(fi_calc(&["gn", "--n", "6", "--k", "12"]).status.code(), Some(2));
    assert_eq!(fi_calc(&["frobnicate"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_fi-calc"))
        .args(["kostka", "--lambda", "1", "--mu", "1"])
        .env("FI_CALC_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_one() {
    let o = fi_calc(&["gn", "--n", "3", "--k", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("gn"));
}

#[test]
fn generated_modules_validate() {
    let dir = tempfile::tempdir().unwrap();
    let f2 = write_module(dir.path(), "f2.json", &["representable", "--n", "2", "--max-degree", "6"]);
    let text = std::fs::read_to_string(&f2).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["dims"], serde_json::json!([0, 0, 2, 6, 12, 20, 30]));
    let m11 = write_module(dir.path(), "m11.json", &["free", "--lambda", "1,1", "--max-degree", "6"]);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&m11).unwrap()).unwrap();
    assert_eq!(v["dims"], serde_json::json!([0, 0, 1, 3, 6, 10, 15]));
    let triv = write_module(dir.path(), "triv.json", &["free", "--lambda", "()", "--max-degree", "3"]);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&triv).unwrap()).unwrap();
    assert_eq!(v["dims"], serde_json::json!([1, 1, 1, 1]));
    for path in [&f2, &m11, &triv] {
        let o = fi_calc(&["validate", path]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("## relations: PASS"));
    }
    let o = fi_calc(&["representable", "--n", "6", "--max-degree", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(fi_calc(&["representable", "--n", "6", "--max-degree", "6", "--allow-large"]).status.success());
}

#[test]
fn invalid_module_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    let f2 = write_module(dir.path(), "f2.json", &["representable", "--n", "1", "--max-degree", "3"]);
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&f2).unwrap()).unwrap();
    // swap the inclusion 1 → 2 for the other embedding of the single basis vector
    v["inclusions"][1]["entries"] = serde_json::json!([0, 1]);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let o = fi_calc(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("## relations: FAIL"));
    std::fs::write(&bad, "{\"name\": 1}").unwrap();
    assert_eq!(fi_calc(&["validate", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn module_computations() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_module(dir.path(), "m2.json", &["free", "--lambda", "2", "--max-degree", "7"]);
    let o = fi_calc(&["coefficients", &path]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("| 2 |"));
    let o = fi_calc(&["decompose", &path, "--k", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sections"][0]["table"]["rows"][0], serde_json::json!(["5", "10", "V(5) + V(4,1) + V(3,2)"]));
    let o = fi_calc(&["predict", &path, "--k", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("## prediction: PASS"));
}

#[test]
fn homology_report() {
    let o = fi_calc(&["homology", "--n", "3", "--k", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "section,degree,rank,torsion\nhomology,0,0,none\nhomology,1,0,none\nhomology,2,14,none\n");
    let o = fi_calc(&["homology", "--n", "2", "--k", "2"]);
    assert!(stdout(&o).contains("no concentration claim"));
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_module(dir.path(), "a.json", &["free", "--lambda", "2,1", "--max-degree", "6"]);
    let b = write_module(dir.path(), "b.json", &["free", "--lambda", "2,1", "--max-degree", "6"]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let r1 = fi_calc(&["report", "--n-max", "2", "--k-max", "5", "--format", "json"]);
    let r2 = fi_calc(&["report", "--n-max", "2", "--k-max", "5", "--format", "json"]);
    assert_eq!(r1.stdout, r2.stdout);
}

#[test]
fn reports_pass() {
    let o = fi_calc(&["report", "--n-max", "0", "--k-max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("no cells with n ≥ 1 in range"));
    assert!(!out.contains("FAIL"));
    let o = fi_calc(&["report", "--n-max", "2", "--k-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.matches(": PASS").count(), 8);
    assert!(out.contains("| 2 | 4 | 20 | 0 5 | none | 5 | PASS |"));
}
