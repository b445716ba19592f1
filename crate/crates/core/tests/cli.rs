use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tracecount"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const CIRCLE: &str = "vars x, y\nx^2 + y^2 - 1\ny - x\nH: x\n";

#[test]
fn count_json_from_stdin() {
    let o = run(&["count", "--json", "-"], Some(CIRCLE));
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys, ["dim_algebra", "distinct_complex", "general_position_t", "h_counts", "total_real"]);
    assert_eq!(v["total_real"], 2);
    assert_eq!(v["h_counts"][0], serde_json::json!({"h": "x", "pos": 1, "neg": 1, "zero": 0}));
    assert_eq!(v["general_position_t"], serde_json::Value::Null);
}

#[test]
fn count_json_key_order_and_stability() {
    let a = run(&["count", "--json", "-"], Some(CIRCLE));
    let b = run(&["--json", "count", "-"], Some(CIRCLE));
    let text = stdout(&a);
    assert_eq!(text, stdout(&b));
    let pos = |k: &str| text.find(&format!("\"{k}\"")).unwrap();
    assert!(pos("total_real") < pos("dim_algebra"));
    assert!(pos("dim_algebra") < pos("distinct_complex"));
    assert!(pos("distinct_complex") < pos("h_counts"));
    assert!(pos("h_counts") < pos("general_position_t"));
}

#[test]
fn count_from_file_and_text_report() {
    let dir = std::env::temp_dir().join(format!("tracecount-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("complex.sys");
    std::fs::write(&path, "vars x\nx^2+1\n").unwrap();
    let o = run(&["count", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("real solutions (distinct):     0"), "{out}");
    assert!(out.contains("complex solutions (with mult): 2"), "{out}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn count_empty_solution_set() {
    let o = run(&["count", "--json", "-"], Some("vars x\nx^2\nx - 1\n"));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["total_real"].as_u64(), v["dim_algebra"].as_u64()), (Some(0), Some(0)));
}

#[test]
fn exit_codes() {
    let o = run(&["count", "-"], Some("vars x\nx^^2\n"));
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 2, column 3"), "{}", stderr(&o));

    let o = run(&["count", "-"], Some("vars x, y\nx^2 - 1\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains('y'));

    let o = run(&["signature", "-"], Some("2\n1 2\n3 4\n"));
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["verify", "-"], Some("vars x\nx^2\n"));
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("squarefree"), "{}", stderr(&o));

    let o = run(&["count", "/nonexistent/system.txt"], None);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn hermite_command() {
    let o = run(&["hermite", "--json", "x^2 + 1"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["r"].as_u64(), v["s"].as_u64()), (Some(0), Some(1)));
    assert_eq!(v["type"], serde_json::json!({"p": 1, "q": 1, "n": 2}));

    let o = run(&["hermite", "x^3 - x"], None);
    assert!(stdout(&o).contains("r = 3"));

    let o = run(&["hermite", "x*y - 1"], None);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn signature_command() {
    let o = run(&["signature", "-"], Some("# diag(2, -2)\n2\n2 0\n0 -2\n"));
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("type: (1, 1)"), "{out}");
    assert!(out.contains("signature: 0"));
    assert!(out.contains("indefinite"));
    assert!(out.contains("descartes check: AGREE"));

    let o = run(&["signature", "--json", "-"], Some("3\n1 0 0\n0 1 0\n0 0 1\n"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["definiteness"], "positive-definite");
}

#[test]
fn verify_command() {
    let o = run(&["verify", "-"], Some(CIRCLE));
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.matches("AGREE").count(), 4, "{out}");
    assert!(!out.contains("DISAGREE"));

    let o = run(&["verify", "-"], Some("vars x\nx^5 - 3*x + 1\n"));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("hermite r vs sturm"));
}

#[test]
fn shape_and_groebner_commands() {
    let square = "vars x, y\nx^2 - 1\ny^2 - 1\n";
    let o = run(&["shape", "--json", "-"], Some(square));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["general_position_t"], "2");

    let o = run(&["shape", "--t", "1/2", "--json", "-"], Some(square));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["general_position_t"], "1/2");

    let o = run(&["shape", "--max-trials", "1", "-"], Some(square));
    assert_eq!(o.status.code(), Some(4));

    let o = run(&["groebner", "--order", "lex", "-"], Some(CIRCLE));
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("x - y") && out.contains("y^2 - 1/2"), "{out}");

    let o = run(&["groebner", "--order", "bogus", "-"], Some(CIRCLE));
    assert_ne!(o.status.code(), Some(0));
}
