use std::process::{Command, Output};

use semihyp::{classify_q, fixture, FiniteSemigroup, Regime, Verdict};

fn semihyp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semihyp")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_t2_reports_non_semisimple() {
    let o = semihyp(&["classify", "fixtures:T2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("hyperbolic: yes"), "{text}");
    assert!(text.contains("regime: NonSemisimple"));
    assert!(text.contains("radical dim 1"));
    assert!(text.contains("NullFactor"));

    let o = semihyp(&["classify", "fixtures:T2", "--json"]);
    let v: Verdict = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.hyperbolic);
    assert_eq!(v.regime, Regime::NonSemisimple);
    assert_eq!(v.oracle.radical_dim, 1);
}

#[test]
fn classify_quad_q8_at_seven() {
    let o = semihyp(&["classify-quad", "fixtures:Q8", "--d", "7", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Verdict = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.hyperbolic);
    assert_eq!(v.quadratic.unwrap().d, 7);

    let o = semihyp(&["classify-quad", "fixtures:Q8", "--d", "3", "--json"]);
    let v: Verdict = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!v.hyperbolic);
}

#[test]
fn non_associative_table_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"order": 2, "table": [[1, 0], [0, 0]]}"#).unwrap();
    let o = semihyp(&["validate", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(err["error"]["kind"], "NonAssociative");
    assert!(String::from_utf8_lossy(&o.stderr).contains("not associative"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(semihyp(&["classify-quad", "fixtures:Q8"]).status.code(), Some(1));
    assert_eq!(semihyp(&["classify-quad", "fixtures:Q8", "--d", "4"]).status.code(), Some(1));
    assert_eq!(semihyp(&["classify", "fixtures:nope"]).status.code(), Some(1));
    assert_eq!(semihyp(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(semihyp(&["--help"]).status.code(), Some(0));
}

#[test]
fn non_unital_needs_opt_in() {
    // Left-zero band {a, b} has no identity in its contracted algebra.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lz.txt");
    std::fs::write(&path, "2\n0 0\n1 1\n").unwrap();
    let p = path.to_str().unwrap();
    let o = semihyp(&["classify", p]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not unital"));
    assert_eq!(semihyp(&["classify", p, "--adjoin-identity"]).status.code(), Some(0));
}

#[test]
fn json_output_round_trips() {
    for name in ["T2", "T2hat", "M", "M1", "S3", "C5"] {
        let o = semihyp(&["classify", &format!("fixtures:{name}"), "--json"]);
        let v: Verdict = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v, classify_q(&fixture(name).unwrap()).unwrap(), "{name}");

        let o = semihyp(&["fixtures", name, "--json"]);
        assert_eq!(FiniteSemigroup::from_json(&stdout(&o)).unwrap(), fixture(name).unwrap());
        let o = semihyp(&["fixtures", name]);
        assert_eq!(FiniteSemigroup::from_text(&stdout(&o)).unwrap(), fixture(name).unwrap().without_names());
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = semihyp(&["block", "fixtures:T2hat", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let b: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(b["tag"], "T2hat");
}

#[test]
fn enumerate_streams_every_class() {
    // With an identity adjoined every member is unital: 5 classes of order 2.
    let o = semihyp(&["enumerate", "--order", "2", "--adjoin-identity", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 5);
    for l in &lines {
        FiniteSemigroup::from_json(&l["semigroup"].to_string()).unwrap();
    }
    let o = semihyp(&["enumerate", "--order", "3", "--filter", "non-semisimple", "--json"]);
    for l in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        assert_eq!(v["regime"], "NonSemisimple");
    }
}
