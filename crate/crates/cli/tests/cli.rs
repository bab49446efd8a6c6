//! The `permspec` binary: exit codes, output and file export.

use std::process::{Command, Output};

fn permspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permspec")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_passes_with_exit_zero() {
    let o = permspec(&["verify", "theorem1", "--n", "5", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["target"], "theorem1");
    assert_eq!(v["kind"], "desx");
    let checks = v["checks"].as_array().unwrap();
    let m = checks.iter().find(|c| c["id"] == "theorem1.multiplicities").unwrap();
    assert_eq!(m["detail"], "multiplicities {0: 109, (n!/2) d_n: 1, -(n-2)! d_n: 10}");
    assert!(checks.iter().all(|c| c["wall_time_ms"] == 0));
}

#[test]
fn flagged_does_not_fail() {
    let o = permspec(&["verify", "theorem2", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 4);
    let d = v["discrepancies"].as_array().unwrap();
    assert!(d.iter().any(|d| d["location"] == "theorem2 V(0)" && d["paper_says"] == "14" && d["oracle_says"] == "17"));
}

#[test]
fn lemma_2_3_value() {
    let o = permspec(&["verify", "lemma2.3", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sum des_X = 3*X[1] + 3*X[2]"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "lemma9.9"][..],
        &["verify", "theorem1", "--n", "7"],
        &["verify", "theorem2", "--n", "6"],
        &["verify", "lemma4.3", "--n", "6"],
        &["spectrum", "--stat", "foo", "--n", "3"],
        &["spectrum", "--stat", "des", "--n", "0"],
        &["matrix", "--stat", "des", "--n", "7", "--format", "csv", "--out", "/dev/null"],
        &["bogus"],
    ] {
        assert_eq!(permspec(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn thread_variable_is_validated() {
    let o = Command::new(env!("CARGO_BIN_EXE_permspec"))
        .args(["verify", "lemma2.3", "--n", "3"])
        .env("PERMSPEC_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_permspec"))
        .args(["verify", "lemma2.3", "--n", "3"])
        .env("PERMSPEC_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn spectrum_text_and_json() {
    let o = permspec(&["spectrum", "--stat", "des", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{36: 1, -6: 6, 0: 17}\n");
    assert_eq!(stdout(&permspec(&["spectrum", "--stat", "maj", "--n", "3"])), "{9: 1, -3: 3, 0: 2}\n");
    assert_eq!(stdout(&permspec(&["spectrum", "--stat", "desx", "--n", "2"])), "{X[1]: 1, -X[1]: 1}\n");
    let o = permspec(&["spectrum", "--stat", "invx", "--n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let twice = v["eigenvalues"].as_array().unwrap().iter().find(|e| e["value"] == "-X[1,2] - 2*X[1,3] - X[2,3]").unwrap();
    assert_eq!(twice["multiplicity"], 2);
}

#[test]
fn matrix_csv_desx_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m.csv");
    let o = permspec(&["matrix", "--stat", "desx", "--n", "2", "--format", "csv", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), "\"0\",\"X[1]\"\n\"X[1]\",\"0\"\n");
}

#[test]
fn matrix_json_inv_3_rows_sum_to_9() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m.json");
    let o = permspec(&["matrix", "--stat", "inv", "--n", "3", "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((v["n"].as_u64(), v["kind"].as_str(), v["order"].as_str()), (Some(3), Some("inv"), Some("lex")));
    let rows = v["entries"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<i64> = row.as_array().unwrap().iter().map(|c| c.as_str().unwrap().parse().unwrap()).collect();
        assert_eq!(cells.iter().sum::<i64>(), 9);
        assert_eq!(cells[i], 0);
    }
}

#[test]
fn matrix_diagonal_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    for stat in ["des", "maj", "inv", "desx", "invx"] {
        let out = dir.path().join(format!("{stat}.csv"));
        let o = permspec(&["matrix", "--stat", stat, "--n", "3", "--format", "csv", "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let text = std::fs::read_to_string(&out).unwrap();
        for (i, line) in text.lines().enumerate() {
            // cells are quoted and may contain commas, as in X[1,2]
            let cells: Vec<&str> = line.trim_matches('"').split("\",\"").collect();
            assert_eq!(cells.len(), 6);
            assert_eq!(cells[i], "0", "{stat} row {i}");
        }
    }
}

#[test]
fn matrix_io_failure_exits_one() {
    let o = permspec(&["matrix", "--stat", "des", "--n", "2", "--format", "csv", "--out", "/nonexistent-dir/m.csv"]);
    assert_eq!(o.status.code(), Some(1));
}
