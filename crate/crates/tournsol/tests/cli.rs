//! End-to-end tests of the `tournsol` binary: flag surface, file formats,
//! exit codes (0 ok, 1 usage/parse, 2 property failure).

use std::io::Write;
use std::process::{Command, Output};

fn tournsol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tournsol"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn solve_fixture_text_report() {
    let out = tournsol(&["solve", "--fixture", "paper", "--concepts", "all"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for needle in [
        "UC1: [3,4,5,6]",
        "MU: [4,5,6]",
        "UT: [3,4,5,6]",
        "MD: [1,2,3,4,5,6]",
        "d_mu: 3",
    ] {
        assert!(text.contains(needle), "missing {needle:?} in:\n{text}");
    }
}

#[test]
fn solve_structured_output_parses() {
    let out = tournsol(&[
        "solve",
        "--fixture",
        "paper",
        "--concepts",
        "MU,MD",
        "--format",
        "structured",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["n"], 6);
    assert_eq!(value["concepts"][0]["concept"], "MU");
    assert_eq!(value["concepts"][0]["members"], serde_json::json!([4, 5, 6]));
}

#[test]
fn solve_from_file_and_single_alternative() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "n 1").unwrap();
    let out = tournsol(&["solve", "--input", file.path().to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    for needle in ["CW: [1]", "MD: [1]", "SS1: [1]", "m: 1"] {
        assert!(text.contains(needle), "missing {needle:?} in:\n{text}");
    }
}

#[test]
fn solve_json_input() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "{{\"n\": 3, \"mu_edges\": [[1,2],[2,3],[3,1]]}}").unwrap();
    let out = tournsol(&["solve", "--input", file.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("MD: [1,2,3]"));
}

#[test]
fn parse_failure_reports_line_and_exits_1() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "n 3\nmu 1 2\nmu 9 1\n").unwrap();
    let out = tournsol(&["solve", "--input", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("line 3"), "no line number in: {err}");
}

#[test]
fn missing_input_is_usage_error() {
    let out = tournsol(&["solve"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_concept_exits_1() {
    let out = tournsol(&["solve", "--fixture", "paper", "--concepts", "BANKS"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown concept"));
}

#[test]
fn tournament_only_concept_on_tied_instance_exits_1_with_message() {
    let out = tournsol(&["solve", "--fixture", "paper", "--concepts", "SP", "--k", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("tournaments only"), "got: {err}");
}

#[test]
fn sp_on_tournament_matches_reference_scan() {
    let gen = tournsol(&["gen", "--kind", "tournament", "--n", "7", "--seed", "13"]);
    assert!(gen.status.success());
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(&gen.stdout).unwrap();
    let out = tournsol(&[
        "solve",
        "--input",
        file.path().to_str().unwrap(),
        "--concepts",
        "SP",
        "--k",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let s = tournsol::instance::parse_text(std::str::from_utf8(&gen.stdout).unwrap()).unwrap();
    let expected = tournsol::oracle::k_stable_alternatives(&s, 2).unwrap();
    let labels: Vec<String> = expected.labels().iter().map(ToString::to_string).collect();
    assert!(
        text.contains(&format!("SP2: [{}]", labels.join(","))),
        "expected SP2 {labels:?} in:\n{text}"
    );
}

#[test]
fn gen_is_deterministic_and_round_trips() {
    let args = [
        "gen", "--kind", "weak", "--n", "8", "--tie-prob", "0.3", "--seed", "7",
    ];
    let a = tournsol(&args);
    let b = tournsol(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "identical bytes for identical flags");

    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(&a.stdout).unwrap();
    let solved = tournsol(&["solve", "--input", file.path().to_str().unwrap()]);
    assert!(solved.status.success());
}

#[test]
fn gen_cycle_has_three_edges() {
    let out = tournsol(&["gen", "--kind", "cycle", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("mu ")).count(), 3);
}

#[test]
fn gen_fixture_reparses_to_fixture() {
    let out = tournsol(&["gen", "--kind", "fixture"]);
    assert!(out.status.success());
    let s = tournsol::instance::parse_text(&stdout(&out)).unwrap();
    assert_eq!(s, tournsol::gen::fixture());
}

#[test]
fn gen_rejects_bad_tie_probability() {
    let out = tournsol(&["gen", "--kind", "weak", "--n", "4", "--tie-prob", "1.5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_small_run_passes() {
    let out = tournsol(&["check", "--trials", "2", "--n", "3..5", "--seed", "5"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS"));
    assert!(text.contains("checks"));
}

#[test]
fn check_bad_range_exits_1() {
    let out = tournsol(&["check", "--n", "8..3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bench_prints_table() {
    let out = tournsol(&["bench", "--sizes", "6,12", "--reps", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("solve_all"));
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn unknown_flag_exits_1() {
    let out = tournsol(&["solve", "--fixture", "paper", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_0() {
    let out = tournsol(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
