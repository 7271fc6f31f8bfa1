use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quatrelax")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_with(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn scan_reports_the_first_template() {
    let o = run(&["scan", fixture("p01.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "NOT-REPRESENTABLE P01 A rows=1 cols=1,2,3 x=1 y=w z=v\n");
}

#[test]
fn scan_of_a_clean_interior_exits_zero() {
    let f = temp_with("1 1\n1 1\n");
    let o = run(&["scan", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "REPRESENTABLE\n");
}

#[test]
fn relax_of_the_wheel_gives_the_whirl() {
    let o = run(&["relax", fixture("wheel3.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("M' is the rank-3 whirl"), "{out}");
    assert!(out.contains("scanner: REPRESENTABLE"));
    assert!(out.contains("omega: REPRESENTABLE"));
    assert!(out.contains("generic: REPRESENTABLE"));
}

#[test]
fn relax_of_a_nonrepresentable_interior_exits_one() {
    let o = run(&["relax", fixture("p01.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("generic: NOT-REPRESENTABLE"));
}

#[test]
fn sweep_2x2_agrees_everywhere() {
    let o = run(&["sweep", "--rows", "2", "--cols", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("agreement 256/256"));
}

#[test]
fn sweep_records_use_the_line_format() {
    let o = run(&["sweep", "--rows", "1", "--cols", "2", "--records"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "A=1w|scan=ok|omega=ok|generic=ok|pw3=y|fragile=u25u35"), "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("A=")).count(), 16);
}

#[test]
fn construct_then_fragility_and_represent() {
    let o = run(&["construct", "X8"]);
    assert_eq!(o.status.code(), Some(0));
    let f = temp_with(&stdout(&o));
    let path = f.path().to_str().unwrap();
    let o = run(&["fragility", path, "--targets", "u25,u35"]);
    assert!(stdout(&o).ends_with("has minor: yes\nfragile: yes\n"));
    let o = run(&["represent", path]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("rows "));

    let p6 = temp_with(&stdout(&run(&["construct", "P6"])));
    assert_eq!(stdout(&run(&["represent", p6.path().to_str().unwrap()])), "none\n");
}

#[test]
fn construct_reads_path_spec_files() {
    let spec = temp_with("# one step\ndn S 1\n");
    let o = run(&["construct", spec.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.starts_with("9 ")));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["scan"]).status.code(), Some(2));
    assert_eq!(run(&["scan", "/definitely/not/here.txt"]).status.code(), Some(2));
    let bad = temp_with("1 q\n");
    assert_eq!(run(&["scan", bad.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["construct", "Q9"]).status.code(), Some(2));
}

#[test]
fn catalog_writes_entries_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cat.txt");
    let o = run(&["catalog", "--max-elements", "7", "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(out).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().all(|l| l.starts_with("key=")));
}
