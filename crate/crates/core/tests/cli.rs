use std::fs;
use std::process::{Command, Output};

use squarefree_depth::stanley::{verify_partition, IntervalPartition};
use squarefree_depth::{QuotientPair, SquarefreeIdeal};

fn sqdepth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqdepth")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn alpha_column(text: &str) -> Vec<String> {
    text.lines().skip(1).map(|l| l.split_whitespace().nth(1).unwrap().to_string()).collect()
}

#[test]
fn alpha_tables() {
    let out = sqdepth(&["alpha", "--family", "bipartite", "2", "2", "--ideal"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(alpha_column(&stdout(&out)), ["0", "0", "4", "4", "1"]);
    assert!(stdout(&out).lines().skip(1).all(|l| l.ends_with("true")));

    let out = sqdepth(&["alpha", "--family", "multipartite", "1,1,1", "--quotient", "--csv"]);
    assert_eq!(stdout(&out), "k,alpha,closed_form,agrees\n0,1,1,true\n1,3,3,true\n2,3,3,true\n3,0,0,true\n");
}

#[test]
fn zero_module_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.ideal");
    fs::write(&path, "n 3\n").unwrap();
    let out = sqdepth(&["alpha", "--file", path.to_str().unwrap(), "--ideal"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(alpha_column(&stdout(&out)), ["0", "0", "0", "0"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("zero module"));

    let out = sqdepth(&["hdepth", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bad_file_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.ideal");
    fs::write(&path, "n 3\n1 2\n1 x\n").unwrap();
    let out = sqdepth(&["hdepth", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"), "{out:?}");
}

#[test]
fn hdepth_certificates() {
    let out = sqdepth(&["hdepth", "--family", "bipartite", "2", "2", "--show-beta"]);
    assert_eq!(stdout(&out), "3\nbeta_3^4 = -4\n");
    let out = sqdepth(&["hdepth", "--family", "multipartite", "1,1,1", "--quotient", "--show-beta"]);
    assert_eq!(stdout(&out), "2\nbeta_3^3 = -1\n");
    let out = sqdepth(&["hdepth", "--family", "zero", "3", "--quotient"]);
    assert_eq!(stdout(&out), "3\n");
    let out = sqdepth(&["hdepth", "--family", "bipartite", "2", "2", "--json"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value[0]["hdepth"], 3);
    assert_eq!(value[0]["failing_value"], "-4");
}

#[test]
fn sdepth_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.txt");
    let out = sqdepth(&["sdepth", "--family", "maximal", "3", "--witness", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2\n");
    let witness = IntervalPartition::parse_witness(3, &fs::read_to_string(&path).unwrap()).unwrap();
    let pair = QuotientPair::ideal(SquarefreeIdeal::maximal(3).unwrap());
    assert!(verify_partition(&pair, &witness, 2, 24).unwrap());

    let out = sqdepth(&["sdepth", "--family", "bipartite", "2", "2"]);
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn sdepth_undecided_exit() {
    let out = sqdepth(&["sdepth", "--family", "multipartite", "10,10"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout(&out), "undecided: [10, 11]\n");
    let out = sqdepth(&["sdepth", "--family", "maximal", "6", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn family_and_bounds() {
    let out = sqdepth(&["family", "bipartite", "2", "1"]);
    assert_eq!(stdout(&out), "n 3\n1 3\n2 3\n");
    let out = sqdepth(&["family", "path-power", "5", "2", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = sqdepth(&["bounds", "--family", "path-power", "5", "2", "1", "--json"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value[0]["upper"], 4);
    assert!(value[0]["citation"].as_str().unwrap().contains("path"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(sqdepth(&[]).status.code(), Some(1));
    assert_eq!(sqdepth(&["nonsense"]).status.code(), Some(1));
    assert_eq!(sqdepth(&["alpha"]).status.code(), Some(1));
    assert_eq!(sqdepth(&["alpha", "--family", "bipartite", "1"]).status.code(), Some(1));
    assert_eq!(sqdepth(&["alpha", "--family", "maximal", "2", "--ideal", "--quotient"]).status.code(), Some(1));
    assert_eq!(sqdepth(&["--help"]).status.code(), Some(0));
}

#[test]
fn audit_exit_codes() {
    let out = sqdepth(&["audit", "--grid", "bipartite", "--max-total", "6", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("spec,alpha,beta_fail,hdepth,sdepth_lo,sdepth_hi,bound_name,bound_value,citation,status\n"));
    assert!(text.contains("bipartite(2,2) I"));

    let out = sqdepth(&["audit", "--grid", "multipartite", "--r", "2", "--max-total", "4", "--only", "violation"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("multipartite(3,1) S/I"));

    let first = sqdepth(&["audit", "--grid", "multipartite", "--r", "3", "--max-total", "7", "--json"]);
    let second = sqdepth(&["audit", "--grid", "multipartite", "--r", "3", "--max-total", "7", "--json"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn scan_report() {
    let out = sqdepth(&["scan", "--r", "2", "--max-block", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().skip(1).all(|l| l.contains("match")));
    let out = sqdepth(&["scan", "--r", "3", "--max-block", "2", "--csv"]);
    assert!(stdout(&out).contains("(2,2,2)"));
}
