//! Process-level checks of the command-line interface: exit codes, byte
//! determinism of the JSON output, stdin and file input, and the seed echo
//! staying out of standard output.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_periodiag"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("the binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin is piped")
        .write_all(input)
        .expect("input fits the pipe");
    child.wait_with_output().expect("the binary exits")
}

fn run(args: &[&str]) -> Output {
    run_with_stdin(args, b"")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

#[test]
fn generated_matrices_are_byte_stable() {
    let a = run(&["gen", "paper-example"]);
    let b = run(&["gen", "paper-example"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout_of(&a).starts_with("{\"n\":5,"));
}

#[test]
fn random_generation_is_seeded() {
    let a = run(&["gen", "random-j", "--n", "6", "--seed", "12"]);
    let b = run(&["gen", "random-j", "--n", "6", "--seed", "12"]);
    let c = run(&["gen", "random-j", "--n", "6", "--seed", "13"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn seed_echo_stays_on_stderr() {
    let out = run(&["gen", "random-j", "--n", "4", "--seed", "5"]);
    assert!(!stdout_of(&out).contains("seed"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("seed: 5"));
}

#[test]
fn spectrum_reads_the_piped_matrix() {
    let m = run(&["gen", "paper-example"]);
    let s = run_with_stdin(&["spectrum"], &m.stdout);
    assert!(s.status.success());
    assert_eq!(
        stdout_of(&s).trim_end(),
        "{\"entries\":[{\"value\":[0.0000000000000000e0,0.0000000000000000e0],\"mult\":5}]}"
    );
}

#[test]
fn spectrum_reads_from_a_file() {
    let m = run(&["gen", "sylvester-kac", "--n", "2"]);
    let path = std::env::temp_dir().join(format!("periodiag-cli-io-{}.json", std::process::id()));
    std::fs::write(&path, &m.stdout).expect("temp file is writable");
    let s = run(&["spectrum", "--in", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert!(s.status.success());
    let text = stdout_of(&s);
    assert!(text.contains("\"mult\":1"), "unexpected spectrum: {text}");
    assert!(text.contains("[-2.0000000000000000e0,0.0000000000000000e0]"));
}

#[test]
fn repeated_runs_emit_identical_bytes() {
    let m = run(&["gen", "random-j", "--n", "7", "--seed", "31"]);
    let s1 = run_with_stdin(&["spectrum"], &m.stdout);
    let s2 = run_with_stdin(&["spectrum"], &m.stdout);
    assert!(s1.status.success());
    assert_eq!(s1.stdout, s2.stdout);
    let e1 = run_with_stdin(&["eigvec"], &m.stdout);
    let e2 = run_with_stdin(&["eigvec"], &m.stdout);
    assert!(e1.status.success());
    assert_eq!(e1.stdout, e2.stdout);
}

#[test]
fn corrupted_input_exits_two() {
    let out = run_with_stdin(&["spectrum"], b"{\"n\": 3, \"sub\": [");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));
}

#[test]
fn unsupported_diagonal_shape_exits_two() {
    let m = "{\"n\":3,\"sub\":[[1,0],[1,0]],\"diag\":[[1,0],[2,0],[3,0]],\
             \"sup\":[[1,0],[1,0]]}";
    let out = run_with_stdin(&["spectrum", "--method", "mapped"], m.as_bytes());
    assert_eq!(out.status.code(), Some(2));
    let oracle = run_with_stdin(&["spectrum", "--method", "oracle"], m.as_bytes());
    assert!(oracle.status.success(), "the dense route accepts any shape");
}

#[test]
fn map_matches_the_two_periodic_spectrum() {
    let m = run(&["gen", "random-j", "--n", "5", "--seed", "8"]);
    let mapped = run_with_stdin(&["map", "--x", "0.5,-1", "--y", "-0.25,2"], &m.stdout);
    assert!(mapped.status.success());
    assert!(stdout_of(&mapped).starts_with("{\"entries\":["));
    let y_alone = run_with_stdin(&["map", "--y", "1"], &m.stdout);
    assert_eq!(y_alone.status.code(), Some(2));
}

#[test]
fn determinant_routes_agree_on_the_fixture() {
    let m = run(&["gen", "sylvester-kac", "--n", "3"]);
    let rec = run_with_stdin(&["det"], &m.stdout);
    let closed = run_with_stdin(&["det", "--method", "closed"], &m.stdout);
    let dense = run_with_stdin(&["det", "--method", "dense"], &m.stdout);
    assert!(rec.status.success());
    // Order 4 with spectrum {-3, -1, 1, 3}: determinant 9.
    assert_eq!(
        stdout_of(&rec).trim_end(),
        "{\"det\":[9.0000000000000000e0,0.0000000000000000e0]}"
    );
    assert_eq!(rec.stdout, closed.stdout);
    assert!(stdout_of(&dense).starts_with("{\"det\":[9.0000000000000000e0,"));
}

#[test]
fn eigvec_emits_the_full_chain() {
    let m = run(&["gen", "paper-example"]);
    let out = run_with_stdin(&["eigvec"], &m.stdout);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("{\"chains\":[{\"eigenvalue\":[0.0000000000000000e0,"));
    // One chain of length five for the quintuple zero.
    assert_eq!(text.matches("\"eigenvalue\"").count(), 1);
    let left = run_with_stdin(&["eigvec", "--left"], &m.stdout);
    assert!(left.status.success());
    assert_ne!(left.stdout, out.stdout);
}

#[test]
fn tiny_verification_corpus_passes() {
    let out = run(&["verify", "--count", "1", "--nmax", "2", "--seed", "1"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout_of(&out).contains("\"passed\":true"));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["spectrum", "--method", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let missing = run(&["gen", "random-j"]);
    assert_eq!(missing.status.code(), Some(2), "--n is required");
}
