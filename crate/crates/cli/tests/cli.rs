//! End-to-end tests driving the compiled binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn pcmlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcmlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_spec(dir: &Path) -> std::path::PathBuf {
    let spec = dir.join("spec.toml");
    fs::write(
        &spec,
        r#"
pcms = ["f05c09", "jade"]
operators = ["rand1/bin"]
dimensions = [5]
problems = ["sphere"]
runs = 3
seed = 11
budget_multiplier = 200
"#,
    )
    .unwrap();
    spec
}

fn read_all_records(root: &Path) -> String {
    let mut chunks = Vec::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(d) = stack.pop() {
        let mut paths: Vec<_> = fs::read_dir(&d)
            .unwrap()
            .map(|e| e.unwrap().path())
            .collect();
        paths.sort();
        for p in paths {
            if p.is_dir() {
                stack.push(p);
            } else if p.extension().is_some_and(|e| e == "jsonl") {
                chunks.push(fs::read_to_string(&p).unwrap());
            }
        }
    }
    chunks.join("\n---\n")
}

#[test]
fn run_analyze_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path());
    let out_a = dir.path().join("a");
    let out_b = dir.path().join("b");

    let run = pcmlab(&["run", spec.to_str().unwrap(), "--output", out_a.to_str().unwrap()]);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(out_a.join("manifest.json").exists());
    // 2 pcms x 1 operator x 1 problem x 3 runs.
    let records = read_all_records(&out_a);
    assert_eq!(records.matches("\"final_error\"").count(), 6);

    // Same spec and seed, more jobs: byte-identical records.
    let rerun = pcmlab(&[
        "run",
        spec.to_str().unwrap(),
        "--jobs",
        "8",
        "--output",
        out_b.to_str().unwrap(),
    ]);
    assert!(rerun.status.success());
    assert_eq!(records, read_all_records(&out_b));

    for mode in ["ecdf", "aps"] {
        let analyze = pcmlab(&["analyze", out_a.to_str().unwrap(), "--mode", mode]);
        assert!(
            analyze.status.success(),
            "{}",
            String::from_utf8_lossy(&analyze.stderr)
        );
    }
    let ecdf = fs::read_to_string(out_a.join("ecdf_f05c09.csv")).unwrap();
    assert!(ecdf.starts_with("budget_per_D,proportion\n"));
    let aps = fs::read_to_string(out_a.join("aps_D5_rand1-bin.csv")).unwrap();
    assert!(aps.starts_with("algorithm,problem_group,aps\n"));
    assert_eq!(aps.lines().count(), 3, "header plus one row per algorithm");
}

#[test]
fn unknown_names_are_config_errors() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("bad.toml");
    fs::write(
        &spec,
        r#"
pcms = ["definitely-not-a-method"]
operators = ["rand1/bin"]
dimensions = [5]
problems = ["sphere"]
"#,
    )
    .unwrap();
    let out = pcmlab(&["run", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("valid names"), "{stderr}");
    assert!(stderr.contains("shade"), "lists the valid names: {stderr}");
}

#[test]
fn list_prints_the_full_catalog() {
    let out = pcmlab(&["list"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    // Header plus 24 rows (23 methods and the baseline).
    assert_eq!(text.lines().count(), 25, "{text}");
    assert!(text.contains("shade"));
    assert!(text.contains("SPCM"));
}

#[test]
fn gaode_writes_probe_counts() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.toml");
    fs::write(
        &spec,
        r#"
pcms = ["f05c09"]
operators = ["rand1/bin"]
dimensions = [4]
problems = ["sphere"]
runs = 2
seed = 5
budget_multiplier = 30
"#,
    )
    .unwrap();
    let out_dir = dir.path().join("out");
    let out = pcmlab(&["gaode", spec.to_str().unwrap(), "--output", out_dir.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let records = read_all_records(&out_dir);
    assert_eq!(records.matches("\"probe_evaluations\"").count(), 2);
}
