use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nakayama"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).map(str::trim))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
}

#[test]
fn analyze_prints_invariants() {
    let o = run(&["analyze", "4,3,3,4,3,3,4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "gldim"), "5");
    assert_eq!(field(&out, "domdim"), "4");
    assert_eq!(field(&out, "defect"), "2");
    assert_eq!(field(&out, "higher_auslander"), "false");
}

#[test]
fn analyze_json() {
    let o = run(&["analyze", "(3,3)", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["series"], "(3,3)");
    assert_eq!(v["gldim"], "inf");
    assert_eq!(v["is_self_injective"], true);
}

#[test]
fn epsilon_iterate() {
    let o = run(&["epsilon", "4,3,3,3", "--iterate"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(3,2,2)\n(2,1)\n");
}

#[test]
fn reverse_and_cover() {
    let o = run(&["reverse", "2,1|3,2,1"]);
    assert_eq!(stdout(&o), "(4,3,3,3,4,3,2,2)\n");
    let o = run(&["cover", "3,2", "3"]);
    assert_eq!(stdout(&o), "(3,2,3,2,3,2)\n");
    let o = run(&["family", "gustafson", "4"]);
    assert_eq!(stdout(&o), "(5,5,5,4)\n");
}

#[test]
fn spectrum_passes() {
    let o = run(&["spectrum", "5"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("found     {3, 5, 6, 7, 8}"), "{out}");
    assert_eq!(out.lines().last(), Some("PASS"));
}

#[test]
fn jobs_from_environment() {
    let o = bin()
        .args(["spectrum", "4"])
        .env("NAKAYAMA_JOBS", "1")
        .output()
        .unwrap();
    assert!(o.status.success());
    let o = bin()
        .args(["spectrum", "4"])
        .env("NAKAYAMA_JOBS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn input_errors_exit_with_two() {
    let o = run(&["analyze", "4,2,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("c_1 = 4"), "{}", stderr(&o));
    for args in [
        &["analyze", "a,b"][..],
        &["analyze", ""],
        &["epsilon", "2,1"],
        &["cover", "3,2", "0"],
        &["family", "spiral", "3"],
        &["verify", "nothing"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn verify_suite_runs() {
    let o = run(&["verify", "chains"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().all(|l| l.starts_with("PASS")));
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn catalog_is_deterministic() {
    let mut files = Vec::new();
    for (i, jobs) in ["1", "4", "4"].iter().enumerate() {
        let path = tmp(&format!("catalog-{i}.jsonl"));
        let o = run(&[
            "catalog",
            "6",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
        files.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(files[0], files[1]);
    assert_eq!(files[1], files[2]);
    let text = String::from_utf8(files.remove(0)).unwrap();
    let mut lines = text.lines();
    let head: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    let records: Vec<serde_json::Value> = lines.map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(head["records"], records.len());
    assert!(!records.is_empty());
    for r in &records {
        assert_eq!(r["gldim"], r["domdim"]);
        assert_eq!(r["rank"], 6);
    }
}
