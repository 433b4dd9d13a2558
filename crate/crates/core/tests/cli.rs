use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn vsasm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vsasm")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_order_two() {
    let o = vsasm(&["count", "--n", "2", "--spec", "u=1,v=1,w=-1,X=1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn count_uses_the_determinant_past_four() {
    let o = vsasm(&["count", "--n", "5"]);
    assert_eq!(stdout(&o), "45885\n");
}

#[test]
fn crosscheck_order_one() {
    let o = vsasm(&["crosscheck", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["agree"], true);
    assert_eq!(v["routes"].as_array().unwrap().len(), 12);
    let terms = v["gf"]["terms"].as_array().unwrap();
    let exps: Vec<Value> = terms.iter().map(|t| t["e"].clone()).collect();
    assert_eq!(exps, [serde_json::json!([1, 0, 0, 1]), serde_json::json!([0, 0, 1, 0]), serde_json::json!([0, 1, 0, -1])]);
}

#[test]
fn tilings_order_three() {
    let o = vsasm(&["tilings", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["unrefined_det"], 26);
    assert_eq!(v["families"], 26);
}

#[test]
fn gf_output_is_deterministic() {
    let a = vsasm(&["gf", "--model", "i2", "--n", "3"]);
    let b = vsasm(&["gf", "--model", "i2", "--n", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let c = vsasm(&["gf", "--model", "brute", "--n", "3"]);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn thread_cap_does_not_change_output() {
    let capped = Command::new(env!("CARGO_BIN_EXE_vsasm"))
        .args(["gf", "--model", "pairs", "--n", "3"])
        .env("VSASM_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(capped.stdout, vsasm(&["gf", "--model", "pairs", "--n", "3"]).stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_vsasm"))
        .args(["count", "--n", "2"])
        .env("VSASM_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["nonsense"][..],
        &["gf", "--model", "i9", "--n", "2"],
        &["count"],
        &["count", "--n", "2", "--spec", "q=1"],
        &["verify-involutions", "--system", "nope"],
        &["magog", "--rspp", "/nonexistent/file.json"],
    ] {
        assert_eq!(vsasm(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn identities_emit_json_lines() {
    let o = vsasm(&["verify-identities", "--only", "id_sum2"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 36);
    assert!(lines.iter().all(|l| l["status"] == "pass" && l["name"] == "id_sum2"));
}

#[test]
fn involution_report() {
    let o = vsasm(&["verify-involutions", "--system", "sum2", "--max-params", "4,4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["reports"].as_array().unwrap().len(), 16);
}

#[test]
fn magog_from_file() {
    let dir = std::env::temp_dir().join(format!("vsasm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("q.json");
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(br#"{"n": 3, "rows": [[3, 1], [1]]}"#).unwrap();
    let o = vsasm(&["magog", "--rspp", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rspp"], serde_json::json!([[3, 1], [1], []]));
    assert_eq!(v["magog"].as_array().unwrap().len(), 4);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn pretty_polynomial() {
    let o = vsasm(&["--pretty", "gf", "--model", "bialternant", "--n", "1"]);
    assert_eq!(stdout(&o), "u*X1 + w + v*X1^-1\n");
}
