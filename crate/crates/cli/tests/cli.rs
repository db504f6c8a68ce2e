use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orthocodes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn value<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|rest| rest.strip_prefix('=')))
}

#[test]
fn search_reports_and_archives() {
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path().to_str().unwrap();
    let out = run(&[
        "search", "--q", "3", "--n", "2", "--construction", "eq2", "--iters", "10", "--out", root,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(value(&text, "d"), Some("3"));
    assert_eq!(value(&text, "classification"), Some("MDS"));
    assert!(dir.path().join("q3_n4_k2_d3").join("generator.txt").exists());

    let check = run(&["archive", "check", "--out", root]);
    assert_eq!(check.status.code(), Some(0), "{}", stdout(&check));
}

#[test]
fn search_is_deterministic() {
    let args = [
        "search", "--q", "13", "--n", "3", "--construction", "eq1", "--iters", "40", "--seed", "9",
    ];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn missed_target_exits_one() {
    // no L in O_2(5) gives an MDS [4, 2, 3] code through eq2
    let out = run(&[
        "search", "--q", "5", "--n", "2", "--construction", "eq2", "--sampling", "whole-group",
        "--target", "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(value(&stdout(&out), "d"), Some("2"));
}

#[test]
fn invalid_specs_exit_two() {
    for args in [
        &["search", "--q", "4", "--n", "2", "--construction", "eq2"][..],
        &["search", "--q", "7", "--n", "3", "--construction", "eq1"],
        &["search", "--q", "7", "--n", "2", "--construction", "nonsense"],
        &["cell", "--q", "7", "--n", "3"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn io_errors_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.txt");
    assert_eq!(
        run(&["verify", "--input", missing.to_str().unwrap()]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["archive", "check", "--out", dir.path().to_str().unwrap()]).status.code(),
        Some(3)
    );
}

fn write_matrix(dir: &Path, text: &str) -> String {
    let path = dir.join("g.txt");
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn verify_and_extend() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_matrix(dir.path(), "3 2 4\n1 0 1 1\n0 1 1 2\n");
    let out = run(&["verify", "--input", &g]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(value(&stdout(&out), "d"), Some("3"));

    let out = run(&["extend", "--input", &g, "--kind", "four", "--iters", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert_eq!(value(&text, "length"), Some("8"));
    assert_eq!(value(&text, "d"), Some("3"));

    let bad = write_matrix(dir.path(), "3 1 4\n1 1 1 0\n");
    assert_eq!(run(&["verify", "--input", &bad]).status.code(), Some(2));
}

#[test]
fn deterministic_cell() {
    let out = run(&["cell", "--q", "3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(value(&text, "achieved"), Some("3"));
    assert_eq!(value(&text, "met"), Some("true"));
}

#[test]
fn group_commands() {
    let out = run(&["group", "order", "--q", "3", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(value(&text, "ku_order").is_some(), "{text}");

    let out = run(&["group", "probe", "--q", "7", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(value(&text, "ku_order"), Some("276595200"));
    assert_eq!(value(&text, "index"), Some("2"));

    let out = run(&["group", "orbit", "--q", "3", "--n", "6", "--vector", "1 0 0 0 0 0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(value(&text, "orbit_size"), Some("252"));
    assert_eq!(value(&text, "equal"), Some("true"));
}
