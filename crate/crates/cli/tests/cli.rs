use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn exe() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tri-moduli"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = exe()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn envelope(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tri-moduli-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn solve_from_stdin_and_file() {
    let input = format!(r#"{{"sides":[1,{},1]}}"#, 2f64.sqrt());
    let a = run(&["solve"], &input);
    assert_eq!(a.status.code(), Some(0));
    let v = envelope(&a);
    assert_eq!(v["ok"], true);
    let p = &v["result"]["P"];
    assert!((p[0].as_f64().unwrap() - 0.2320508).abs() < 1e-7);

    let path = scratch("solve.json");
    std::fs::write(&path, &input).unwrap();
    let b = run(&["solve", "--json", path.to_str().unwrap()], "");
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["solve", "--json", "-"], &input);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["solve"], r#"{"sides":[1,1,3]}"#).status.code(), Some(2));
    assert_eq!(run(&["shape"], "{").status.code(), Some(2));
    assert_eq!(run(&["circle3d"], r#"{"sides":[1,1,1]}"#).status.code(), Some(2));
    assert_eq!(run(&["plot", "mandelbrot"], "").status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"], "").status.code(), Some(2));
    assert_eq!(
        run(&["verify", "thm35", "--n", "3", "--tol", "1e-300"], "")
            .status
            .code(),
        Some(3)
    );
    assert_eq!(run(&["--help"], "").status.code(), Some(0));
    let bad = run(&["rotate"], "");
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}

#[test]
fn error_envelope_names_the_field() {
    let o = run(&["act"], r#"{"pompeiu":[0.5,0],"lambda":1}"#);
    assert_eq!(o.status.code(), Some(2));
    let v = envelope(&o);
    assert_eq!(v["ok"], false);
    assert_eq!(v["command"], "act");
    assert_eq!(v["error"]["field"], "lambda");
    assert!(v["error"]["message"].as_str().unwrap().contains("disc"));
}

#[test]
fn plot_to_stdout_and_file() {
    let direct = run(&["plot", "disc-orbit"], "");
    assert_eq!(direct.status.code(), Some(0));
    assert!(direct.stdout.starts_with(b"<svg"));

    let path = scratch("orbit.svg");
    let o = run(&["plot", "disc-orbit", "--out", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(envelope(&o)["result"]["figure"], "disc-orbit");
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn plot_parameters_from_json() {
    let path = scratch("pencil.json");
    std::fs::write(&path, r#"{"hyperbolic":3,"elliptic":4}"#).unwrap();
    let o = run(&["plot", "pencil", "--json", path.to_str().unwrap()], "");
    assert_eq!(String::from_utf8(o.stdout).unwrap().matches("<path ").count(), 7);
}

#[test]
fn outputs_are_byte_identical() {
    for args in [
        &["verify", "all", "--n", "25", "--seed", "3"][..],
        &["plot", "pencil"][..],
        &["plot", "cevian"][..],
        &["plot", "circle3d"][..],
    ] {
        assert_eq!(run(args, "").stdout, run(args, "").stdout, "{args:?}");
    }
    let a = run(&["verify", "space3", "--n", "10", "--seed", "1"], "");
    let b = run(&["verify", "space3", "--n", "10", "--seed", "2"], "");
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn degrees_round_trip_through_act() {
    let o = run(&["act", "--degrees"], r#"{"pompeiu":[0.3,0],"theta":90}"#);
    let v = envelope(&o);
    assert!((v["result"]["theta"].as_f64().unwrap() - 90.0).abs() < 1e-12);
    let z = &v["result"]["pompeiu"];
    assert!(z[0].as_f64().unwrap().abs() < 1e-12);
    assert!((z[1].as_f64().unwrap() - 0.3).abs() < 1e-12);
}
