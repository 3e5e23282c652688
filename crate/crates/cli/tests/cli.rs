use std::io::Write;
use std::process::{Command, Output, Stdio};

const KH: &str = r#"{"monoid":{"kind":"oracle","family":"slope_halfplane","dim":2}}"#;
const KH_XY: &str = r#"{"monoid":{"kind":"oracle","family":"slope_halfplane","dim":2},"generators":[[1,1]]}"#;
const A2: &str = r#"{"kind":"affine","dim":2,"generators":[[1,0],[1,1],[1,2]]}"#;

fn run(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_limitcm"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hilbert_basis_of_a2() {
    let o = run(&["monoid", "hilbert-basis", "--in", "-", "--json"], Some(A2), &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["hilbert_basis"], serde_json::json!(["(1,0)", "(1,1)", "(1,2)"]));
}

#[test]
fn cech_table_accepts_negative_box() {
    let o = run(&["cohom", "cech", "--ring", "-", "--seq", "t[1,0]", "--box", "-3..3"], Some(KH), &[]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("least nonzero: H^1 at (0,1)"), "{out}");
    // x is a nonzerodivisor on k[H], so H^0 vanishes everywhere.
    for line in out.lines().filter(|l| l.starts_with('(')) {
        let cols: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(cols[1], "0", "{line}");
    }
}

#[test]
fn regular_check_fails_with_exit_one() {
    let o = run(&["check", "regular", "--in", "-", "--seq", "t[1,0]"], Some(KH_XY), &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(1,2)"));
}

#[test]
fn parse_errors_exit_two() {
    let o = run(&["monoid", "faces", "--in", "-"], Some("{not json"), &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let o = run(&["cohom", "grade", "--in", "-", "--seq", "t[1,0]", "--box", "3..x"], Some(KH), &[]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["paper", "run", "no-such-scenario"], None, &[]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["paper", "list"], None, &[("LIMITCM_THREADS", "zero")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn paper_run_is_byte_identical() {
    let args = ["paper", "run", "truncation-counterexample", "--json"];
    let a = run(&args, None, &[("LIMITCM_THREADS", "1")]);
    let b = run(&args, None, &[("LIMITCM_THREADS", "3")]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["scenario"], "truncation-counterexample");
    assert_eq!(v["passed"], true);
}

#[test]
fn paper_run_honours_ladder_flags() {
    let o = run(
        &["paper", "run", "truncation-counterexample", "--trunc", "3,5", "--box", "6,9", "--json"],
        None,
        &[],
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["truncations"], serde_json::json!([3, 5]));
    assert_eq!(v["config"]["boxes"], serde_json::json!([6, 9]));
    let o = run(&["paper", "run", "halfplane-limit", "--trunc", "0"], None, &[]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn paper_list_names_every_scenario() {
    let o = run(&["paper", "list"], None, &[]);
    let out = stdout(&o);
    for id in [
        "direct-system",
        "halfplane-limit",
        "truncation-counterexample",
        "augmentation-variety",
        "halfplane-cm",
        "non-coherence",
        "hochster",
        "veronese-limit",
        "monomial-pairs",
    ] {
        assert!(out.contains(id), "{id}");
    }
}

#[test]
fn colon_reports_growth_on_oracle() {
    let o = run(&["ideal", "colon", "--in", "-", "--by", "t[1,0]", "--box", "0..5,0..5"], Some(KH_XY), &[]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("t[1,5]") && !out.contains("t[1,6]"), "{out}");
}
