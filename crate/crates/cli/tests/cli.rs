use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cubeset"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn hom_counts() {
    for (t, m, n, want) in [("P", "2", "1", "6"), ("none", "1", "1", "3"), ("none", "0", "2", "4")] {
        let o = run(&["hom", "--theory", t, "--m", m, "--n", n, "--count"], None);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), want, "{t} {m} {n}");
    }
    let o = run(&["hom", "--theory", "none", "--m", "1", "--n", "1", "--list"], None);
    assert_eq!(stdout(&o).lines().count(), 3);
    assert_eq!(run(&["hom", "--theory", "bogus", "--m", "1", "--n", "1"], None).status.code(), Some(2));
}

#[test]
fn factor() {
    let f = json!({"m": 2, "n": 2, "table": ["01", "11", "01", "11"]}).to_string();
    let o = run(&["factor"], Some(&f));
    assert!(o.status.success());
    let v = json_out(&o);
    assert_eq!(v["kappa"], json!([[2, 1]]));
    assert_eq!(v["psi"], json!({"m": 2, "n": 1, "table": ["0", "1", "0", "1"]}));
    assert_eq!(v["baseDimension"], 1);
    assert_eq!(run(&["factor"], Some("{")).status.code(), Some(2));
}

#[test]
fn ndecomp() {
    let delta = json!({"m": 1, "n": 2, "table": ["00", "11"]}).to_string();
    let o = run(&["ndecomp", "--k", "0", "--flavor", "meet"], Some(&delta));
    assert!(o.status.success());
    assert_eq!(json_out(&o), json!({"m": 2, "n": 2, "table": ["00", "00", "10", "11"]}));
    let point = json!({"m": 1, "n": 0, "table": ["", ""]}).to_string();
    assert_eq!(run(&["ndecomp"], Some(&point)).status.code(), Some(2));
}

#[test]
fn check() {
    let o = run(&["check", "--suite", "n-identities", "--max-dim", "2", "--max-k", "2", "--theory", "P"], None);
    assert!(o.status.success());
    let v = json_out(&o);
    assert_eq!(v["failureCount"], 0);
    assert!(v["cases"].as_u64().unwrap() > 0);
    assert_eq!(run(&["check", "--suite", "nonsense"], None).status.code(), Some(2));
    assert!(stdout(&run(&["check", "--list"], None)).lines().any(|l| l.starts_with("anodyne\t")));
}

#[test]
fn certify_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let p = path.to_str().unwrap();
    let o = run(&["certify", "--A", "meet", "--B", "poset", "--n", "1", "--D", "3", "--source", "unit", "--target", "full", "--out", p], None);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    let cert: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(cert["allInner"], true);

    let o = run(&["verify", p], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["verify"], Some(&text)).status.code(), Some(0));

    // Flip one bit of the first step's interior.
    let mut bad = cert.clone();
    let row = bad["steps"][0]["phi"]["table"][0].as_str().unwrap().to_string();
    let flipped: String = row.chars().enumerate().map(|(i, c)| if i == 0 { if c == '0' { '1' } else { '0' } } else { c }).collect();
    bad["steps"][0]["phi"]["table"][0] = Value::String(flipped);
    assert_eq!(run(&["verify"], Some(&bad.to_string())).status.code(), Some(1));

    assert_eq!(run(&["verify"], Some("not json")).status.code(), Some(2));
}

#[test]
fn certify_from_a_request_file() {
    let req = json!({
        "theoryA": ["meet"], "theoryB": ["delta", "join", "meet", "sigma"], "n": 1, "truncation": 3,
        "source": "unit", "target": "full", "flavor": "meet"
    });
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("req.json");
    std::fs::write(&path, req.to_string()).unwrap();
    let from_file = run(&["certify", path.to_str().unwrap()], None);
    let from_flags = run(&["certify"], None);
    assert!(from_file.status.success() && from_flags.status.success());
    assert_eq!(from_file.stdout, from_flags.stdout);
}

#[test]
fn output_is_deterministic() {
    for args in [&["certify", "--n", "2"][..], &["hom", "--theory", "meet", "--m", "2", "--n", "2", "--list"]] {
        assert_eq!(run(args, None).stdout, run(args, None).stdout);
    }
}
