use std::process::{Command, Output};

use serde_json::Value;

fn idxsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idxsum"))
        .args(args)
        .env_remove("IDXSUM_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = idxsum(&all);
    (serde_json::from_slice(&o.stdout).expect("json output"), o.status.code().unwrap())
}

fn prediction<'a>(v: &'a Value, theorem: &str, modulus: u64) -> &'a Value {
    v["predictions"]
        .as_array()
        .unwrap()
        .iter()
        .find(|p| p["theorem"] == theorem && p["asserted_modulus"] == modulus)
        .unwrap_or_else(|| panic!("no {theorem} prediction mod {modulus}"))
}

#[test]
fn sum_modulo_nine() {
    let (v, code) = json(&["sum", "--modulus", "9", "--delta", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["oracle"], 7);
    assert_eq!(prediction(&v, "T1.7", 9)["predicted"], 7);
    assert_eq!(v["status"], "AGREE");
}

#[test]
fn sum_modulo_twenty_one() {
    let (v, code) = json(&["sum", "--modulus", "21", "--delta", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["oracle"], 20);
    assert_eq!(prediction(&v, "T1.8", 3)["predicted"], 2);
    assert_eq!(prediction(&v, "T1.8", 7)["predicted"], 6);
}

#[test]
fn empty_class_is_reported_not_an_error() {
    let o = idxsum(&["sum", "--modulus", "7", "--delta", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("empty class"));
    let (v, _) = json(&["sum", "--modulus", "7", "--delta", "5"]);
    assert_eq!(v["status"], "EMPTY");
}

#[test]
fn products() {
    let (v, code) = json(&["product", "--modulus", "7", "--delta", "2"]);
    assert_eq!((v["oracle"].as_u64(), code), (Some(6), 0));
    let (v, _) = json(&["product", "--modulus", "8", "--delta", "2"]);
    assert_eq!(v["oracle"], 1);
    let (v, _) = json(&["product", "--modulus", "35", "--delta", "1"]);
    assert_eq!(v["oracle"], 1);
}

#[test]
fn closed_method_skips_the_oracle() {
    let (v, code) = json(&["sum", "-m", "9", "-d", "6", "--method", "closed"]);
    assert_eq!(code, 0);
    assert!(v.get("oracle").is_none());
    assert_eq!(v["status"], "UNCHECKED");
}

#[test]
fn known_counterexample_exits_with_mismatch() {
    let (v, code) = json(&["sum", "-m", "63", "-d", "3"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "MISMATCH");
    assert_eq!(prediction(&v, "T1.9", 9)["oracle"], 8);
}

#[test]
fn class_tables() {
    let counts = |m: &str| -> Vec<(u64, u64)> {
        let (v, _) = json(&["classes", "--modulus", m]);
        v["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| (r["delta"].as_u64().unwrap(), r["count"].as_u64().unwrap()))
            .collect()
    };
    assert_eq!(counts("15"), [(1, 1), (2, 3), (4, 4)]);
    assert_eq!(counts("16"), [(1, 1), (2, 3), (4, 4)]);
    assert_eq!(counts("1"), [(1, 1)]);
    let (v, _) = json(&["classes", "--modulus", "15"]);
    assert_eq!(v["partition"]["holds"], true);
}

#[test]
fn csv_has_a_header() {
    let o = idxsum(&["classes", "--modulus", "16", "--format", "csv"]);
    assert!(stdout(&o).starts_with("delta,count,"));
    let o = idxsum(&["sum", "-m", "9", "-d", "6", "--format", "csv"]);
    assert!(stdout(&o).starts_with("theorem_id,m,delta,asserted_modulus,expected,actual,status\n"));
}

#[test]
fn function_values() {
    let value = |args: &[&str]| json(args).0["value"].as_str().unwrap().to_owned();
    assert_eq!(value(&["fn", "--name", "M", "--n", "12"]), "1/12");
    assert_eq!(value(&["fn", "--name", "mu", "--n", "6"]), "1");
    assert_eq!(value(&["conv", "--left", "u", "--right", "u", "--op", "lcm", "--n", "13"]), "3");
    assert_eq!(value(&["conv", "--left", "mu", "--right", "u", "--n", "12"]), "0");
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["fn", "--name", "bogus", "--n", "3"][..],
        &["verify", "--theorem", "bogus"],
        &["sum", "--modulus", "0", "--delta", "1"],
        &["sum", "--modulus", "5"],
        &["frobnicate"],
    ] {
        assert_eq!(idxsum(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(idxsum(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_single_theorem_passes() {
    let (v, code) = json(&["verify", "--max-modulus", "500", "--theorem", "T1.5"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["per_theorem"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_writes_the_report_file() {
    let path = std::env::temp_dir().join(format!("idxsum-report-{}.json", std::process::id()));
    let o = idxsum(&[
        "verify",
        "--max-modulus",
        "100",
        "--theorem",
        "t1.6",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["per_theorem"][0]["theorem_id"], "T1.6");
}

#[test]
fn jobs_can_come_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_idxsum"))
        .args(["verify", "--max-modulus", "50", "--theorem", "L2.2"])
        .env("IDXSUM_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_idxsum"))
        .args(["verify", "--max-modulus", "50", "--theorem", "L2.2"])
        .env("IDXSUM_JOBS", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_round_trips() {
    let o = idxsum(&["verify", "--max-modulus", "120", "--theorem", "T1.9", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
    let report: idxsum_verify::VerificationReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report.to_json() + "\n", String::from_utf8(o.stdout).unwrap());
}
