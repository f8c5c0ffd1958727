use primcov::cli::run;
use primcov::cover::CoverInstance;
use primcov::verify::CheckReport;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("primcov").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("primcov-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn sigma0_small_groups() {
    let (code, out, _) = call(&["sigma0", "S5"]);
    assert_eq!(code, 0);
    assert!(out.contains('6'), "{out}");

    let (code, out, _) = call(&["sigma0", "C6", "--format", "jsonl"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["sigma0"], "2");
    assert_eq!(v["status"], "optimal");
}

#[test]
fn dump_then_solve() {
    let path = tmp("s4.cover");
    let (code, _, err) = call(&["sigma0", "S4", "--dump", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let text = std::fs::read_to_string(&path).unwrap();
    let inst = CoverInstance::parse(&text).unwrap();
    assert!(!inst.sets.is_empty());

    let (code, out, err) = call(&["solve", path.to_str().unwrap(), "--format", "jsonl"]);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["size"], "4");
    assert_eq!(v["status"], "optimal");
}

#[test]
fn solve_rejects_malformed_dump() {
    let path = tmp("bad.cover");
    std::fs::write(&path, "set 0 x: 1,2\n").unwrap();
    let (code, _, err) = call(&["solve", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn counts() {
    let (code, out, _) = call(&["count", "--n", "14", "--family", "W7", "--class", "8,4,2", "--human"]);
    assert_eq!(code, 0);
    assert!(out.contains("3,175,200"), "{out}");

    let (code, out, _) = call(&["count", "--n", "11", "--family", "X1", "--class", "4,4,2,1", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.contains("56700"), "{out}");

    let (code, _, err) = call(&["count", "--n", "8", "--family", "W4", "--class", "4,4"]);
    assert_eq!(code, 2);
    assert!(err.contains("n/2"), "{err}");
}

#[test]
fn verify_reports_round_trip() {
    let (code, out, _) = call(&["verify", "unbeatable", "--n", "10", "--format", "jsonl"]);
    assert_eq!(code, 0);
    for line in out.lines() {
        let r: CheckReport = serde_json::from_str(line).unwrap();
        assert!(r.passed());
        assert_eq!(r.to_json_line(), line);
    }

    // a genuine counterexample is a failure with exit code 1
    let (code, out, _) = call(&["verify", "unbeatable", "--n", "7"]);
    assert_eq!(code, 1);
    assert!(out.contains("fail"), "{out}");
}

#[test]
fn table_rows() {
    let (code, out, _) = call(&["table", "--max", "12", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("10,") && l.contains("46")), "{out}");
    assert!(out.lines().any(|l| l.starts_with("12,") && l.contains("117")), "{out}");
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["verify", "no-such-check"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["table", "--format", "xml"]).0, 2);
    // wall time cannot be reproduced
    assert_eq!(call(&["sigma0", "S4", "--det", "--budget", "10s"]).0, 2);
    assert_eq!(call(&["sigma0", "S4", "--det", "--budget", "10000"]).0, 0);
}
