//! Exit codes and report round trips of the command-line binary.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use simplicial_measure::report::Report;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Output {
    let output = Command::new(env!("CARGO_BIN_EXE_simmeasure"))
        .args(args)
        .output()
        .expect("spawn simmeasure");
    Output {
        code: output.status.code().unwrap_or(-1),
        stdout: String::from_utf8(output.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(output.stderr).expect("utf-8 stderr"),
    }
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("simmeasure-cli-{}-{name}", std::process::id()))
}

#[test]
fn unknown_arguments_exit_1() {
    assert_eq!(run(&["frobnicate"]).code, 1);
    assert_eq!(run(&["validate"]).code, 1);
    assert_eq!(run(&["validate", "--complex"]).code, 1);
    assert_eq!(run(&["gen", "nosuch"]).code, 1);
    assert_eq!(run(&["verify", "--suite", "nosuch"]).code, 1);
    let missing = temp_path("missing.cf");
    assert_eq!(
        run(&["validate", "--complex", missing.to_str().unwrap()]).code,
        1
    );
}

#[test]
fn file_syntax_errors_exit_1() {
    let path = temp_path("syntax.cf");
    fs::write(&path, "simplex 0 1 2 3\n").unwrap();
    let out = run(&["validate", "--complex", path.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("line 1"), "stderr: {}", out.stderr);
    fs::remove_file(&path).ok();
}

#[test]
fn invalid_complex_exits_2_with_violations() {
    let path = temp_path("overfull.cf");
    fs::write(
        &path,
        "simplex 0 1 2 3 4\nsimplex 0 1 2 3 5\nsimplex 0 1 2 3 6\n",
    )
    .unwrap();
    let out = run(&["validate", "--complex", path.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    let report = Report::parse(&out.stdout).unwrap();
    assert_eq!(report.get("complex.valid"), Some("false"));
    assert!(report.get("violation.0").is_some());
    fs::remove_file(&path).ok();
}

#[test]
fn failing_suite_exits_3() {
    let out = run(&["verify", "--suite", "detm", "--tolerance", "1e-18"]);
    assert_eq!(out.code, 3);
    let report = Report::parse(&out.stdout).unwrap();
    assert_eq!(report.get("passed"), Some("false"));
}

#[test]
fn rank_suite_passes() {
    let out = run(&["verify", "--suite", "rank"]);
    assert_eq!(out.code, 0);
    let report = Report::parse(&out.stdout).unwrap();
    assert_eq!(report.get("suite.rank.passed"), Some("true"));
    assert_eq!(report.get("passed"), Some("true"));
}

#[test]
fn generated_fixture_round_trips() {
    let path = temp_path("gluedpair.cf");
    let path_str = path.to_str().unwrap();
    assert_eq!(run(&["gen", "gluedpair", "--out", path_str]).code, 0);

    let out = run(&["validate", "--complex", path_str]);
    assert_eq!(out.code, 0);
    let report = Report::parse(&out.stdout).unwrap();
    assert_eq!(report.get("complex.four_simplices"), Some("2"));
    assert_eq!(report.get("complex.valid"), Some("true"));

    // gen without --out prints the same file to standard output.
    let printed = run(&["gen", "gluedpair"]);
    assert_eq!(printed.code, 0);
    assert_eq!(printed.stdout, fs::read_to_string(&path).unwrap());

    let out = run(&["measure", "--complex", path_str]);
    assert_eq!(out.code, 0);
    let report = Report::parse(&out.stdout).unwrap();
    assert_eq!(report.get("exponent.1-2-3-4"), Some("4"));
    assert_eq!(report.get("kept_deltas.count"), Some("6"));
    assert!(report.get("note.0").is_some());
    assert!(report.get("volume_factor.log").is_some());
    fs::remove_file(&path).ok();
}

#[test]
fn constraints_report_matches_library_counts() {
    let path = temp_path("boundary5.cf");
    let path_str = path.to_str().unwrap();
    assert_eq!(run(&["gen", "boundary5", "--out", path_str]).code, 0);
    let out = run(&["constraints", "--complex", path_str]);
    assert_eq!(out.code, 0);
    let report = Report::parse(&out.stdout).unwrap();
    assert_eq!(report.get("constraints.variables"), Some("60"));
    assert_eq!(report.get("constraints.count"), Some("90"));
    assert_eq!(report.get("constraints.rank"), Some("45"));
    assert_eq!(report.get("constraints.kept"), Some("45"));
    assert_eq!(report.get("kernel.dimension"), Some("15"));
    fs::remove_file(&path).ok();
}

#[test]
fn action_accepts_length_overrides() {
    let path = temp_path("action.cf");
    let path_str = path.to_str().unwrap();
    assert_eq!(run(&["gen", "boundary5", "--out", path_str]).code, 0);

    let unit = run(&["action", "--complex", path_str, "--coefficient", "1.0"]);
    assert_eq!(unit.code, 0);
    let report = Report::parse(&unit.stdout).unwrap();
    let global: f64 = report.get("action.global").unwrap().parse().unwrap();
    let split: f64 = report.get("action.split").unwrap().parse().unwrap();
    let expected = 20.0 * (3.0f64.sqrt() / 4.0)
        * (2.0 * std::f64::consts::PI - 3.0 * 0.25f64.acos());
    assert!((global - expected).abs() < 1e-10);
    assert!((split - global).abs() < 1e-10);

    // Uniform scaling of squared lengths scales areas, not deficits.
    let scaled = run(&[
        "action",
        "--complex",
        path_str,
        "--coefficient",
        "1.0",
        "--lengths",
        "4.0",
    ]);
    assert_eq!(scaled.code, 0);
    let report = Report::parse(&scaled.stdout).unwrap();
    let scaled_global: f64 = report.get("action.global").unwrap().parse().unwrap();
    assert!((scaled_global - 4.0 * global).abs() < 1e-9);
    fs::remove_file(&path).ok();
}

#[test]
fn volumes_report_totals() {
    let path = temp_path("volumes.cf");
    let path_str = path.to_str().unwrap();
    assert_eq!(run(&["gen", "gluedpair", "--out", path_str]).code, 0);
    let out = run(&["volumes", "--complex", path_str, "--lengths", "uniform:1.0"]);
    assert_eq!(out.code, 0);
    let report = Report::parse(&out.stdout).unwrap();
    let total4: f64 = report.get("total.4").unwrap().parse().unwrap();
    assert!((total4 - 2.0 * 5.0f64.sqrt() / 96.0).abs() < 1e-12);
    // Missing lengths for an edge are a validation failure, not a crash.
    fs::write(&path, "simplex 0 1 2 3 4\n").unwrap();
    let out = run(&["volumes", "--complex", path_str]);
    assert_eq!(out.code, 2);
    fs::remove_file(&path).ok();
}
