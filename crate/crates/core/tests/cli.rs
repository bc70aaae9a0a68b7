use std::process::{Command, Output};

use hlgt::Polynomial;

fn hlgt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hlgt")).args(args).output().expect("spawn hlgt")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_modes_agree() {
    let closed = hlgt(&["compute", "--lambda", "1,0,0", "--mode", "closed", "--format", "json"]);
    let recursive = hlgt(&["compute", "--lambda", "1,0,0", "--mode", "recursive", "--format", "json"]);
    assert!(closed.status.success());
    assert_eq!(stdout(&closed), stdout(&recursive));
    let p = Polynomial::from_json(stdout(&closed).trim()).unwrap();
    assert_eq!(p.n_vars(), 3);
}

#[test]
fn compute_text_output() {
    let o = hlgt(&["compute", "--lambda", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x1*x2 + t*x1*x2\n");
    let o = hlgt(&["compute", "--lambda", "0,0", "--mode", "closed"]);
    assert_eq!(stdout(&o), "x1 + t*x1 - q*x2 - q*t*x2\n");
}

#[test]
fn compute_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hl.json");
    let o = hlgt(&["compute", "--lambda", "2,1", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let p = Polynomial::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(p, hlgt::oracle::hall_littlewood(&[2, 1].into()).unwrap());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "--lambda", "0,1"][..],
        &["compute", "--lambda", "x"],
        &["compute", "--lambda", "1,1", "--mode", "stanley"],
        &["patterns", "--top", "2,1", "--stats"],
        &["verify", "--n", "99", "--max-part", "1"],
        &["verify", "--n", "2", "--max-part", "1", "--suite", "nope"],
        &["bench", "--n", "0", "--max-part", "1"],
        &["frobnicate"],
    ] {
        let o = hlgt(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn pattern_counts() {
    let tail = |args: &[&str]| stdout(&hlgt(args)).lines().last().unwrap().to_string();
    assert_eq!(tail(&["patterns", "--top", "2,1,0", "--strict"]), "7 patterns");
    assert_eq!(tail(&["patterns", "--top", "2,1,0"]), "8 patterns");
    assert_eq!(tail(&["patterns", "--top", "1,0"]), "2 patterns");
    assert_eq!(tail(&["patterns", "--top", "1,0", "--strict"]), "2 patterns");
    assert_eq!(tail(&["patterns", "--top", "0,0,0"]), "1 pattern");
}

#[test]
fn pattern_stats_show_worked_coefficient() {
    let out = stdout(&hlgt(&["patterns", "--top", "3,1,0", "--strict", "--stats"]));
    let block = out.split("\n\n").find(|b| b.contains("3 1 0\n 2 0\n  1\n")).unwrap();
    assert!(block.contains("row 1: 1 - q + t - q*t"));
    assert!(block.contains("row 2: 1 - q\n"));
    assert!(block.contains("coefficient: 1 - 2*q + t + q^2 - 2*q*t + q^2*t"));
}

#[test]
fn unique_strict_pattern_with_weight_211() {
    let o = hlgt(&["patterns", "--top", "3,1,0", "--strict", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let hits: Vec<_> = v.as_array().unwrap().iter().filter(|r| r["m"] == serde_json::json!([2, 1, 1])).collect();
    assert_eq!(hits.len(), 1);
    assert_eq!(hits[0]["rows"], serde_json::json!([[3, 1, 0], [2, 0], [1]]));
}

#[test]
fn pattern_json_lists_rows() {
    let o = hlgt(&["patterns", "--top", "2,1,0", "--strict", "--stats", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 7);
    assert_eq!(arr[0]["rows"][0], serde_json::json!([2, 1, 0]));
    assert!(arr[0]["coefficient"].is_string());
}

#[test]
fn verify_runs_and_reports() {
    let o = hlgt(&["verify", "--n", "1", "--max-part", "0", "--suite", "main"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1 cases, 1 passed, 0 failed"));

    let o = hlgt(&["verify", "--n", "3", "--max-part", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["total"].as_u64().unwrap() > 0);
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bench.csv");
    let o = hlgt(&["bench", "--n", "2,3", "--max-part", "1", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,lambda,mode,terms,seconds"));
    // 3 + 4 partitions, two modes each
    assert_eq!(lines.count(), 14);
}

#[test]
fn oracle_cap_is_configurable() {
    let o = Command::new(env!("CARGO_BIN_EXE_hlgt"))
        .args(["verify", "--n", "3", "--max-part", "0"])
        .env("GT_ORACLE_NMAX", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
