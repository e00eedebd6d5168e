use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use alliance_tools::cli::{CheckJson, FamilyJson};
use alliance_tools::json::ReportJson;
use alliance_tools::search::SearchResult;
use alliance_tools::verify::Summary;
use strong_alliance::AlliancePolynomial;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn alliance(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alliance")).args(args).output().unwrap()
}

fn alliance_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_alliance"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_examples() {
    let o = alliance(&["compute", "--input", &data("c4.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x^4 + 4x^3 + 4x^2\n");

    let o = alliance(&["compute", "--input", &data("seven.txt")]);
    assert_eq!(stdout(&o), "x^7 + 5x^6 + 6x^5 + x^4 + 3x^3 + x^2\n");

    let o = alliance(&["compute", "--input", &data("e3.txt")]);
    assert_eq!(stdout(&o), "3x\n");

    let o = alliance(&["compute", "--family", "double_star:3,3"]);
    assert_eq!(stdout(&o), "x^6 + 4x^5 + 4x^4 + 2x^3\n");
}

#[test]
fn stdin_and_graph6_input() {
    let o = alliance_stdin(&["compute", "--input", "-"], "4 3\n0 1\n1 2\n2 3\n");
    assert_eq!(stdout(&o), "x^4 + 2x^3 + 3x^2\n");
    let o = alliance_stdin(&["compute", "--input", "-", "--format", "graph6"], "Cl\n");
    assert_eq!(stdout(&o), "x^4 + 4x^3 + 4x^2\n");
    let o = alliance_stdin(&["compute", "--input", "-", "--format", "graph6"], "Cl\nCh\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn engines_agree_through_the_cli() {
    for input in ["c4.txt", "seven.txt", "e3.txt"] {
        let run = |engine| stdout(&alliance(&["compute", "--input", &data(input), "--engine", engine]));
        assert_eq!(run("oracle"), run("connected"));
        assert_eq!(run("auto"), run("connected"));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(alliance(&["compute", "--input", "/nonexistent/file"]).status.code(), Some(1));
    assert_eq!(alliance_stdin(&["compute", "--input", "-"], "3 2\n0 1\n").status.code(), Some(2));
    assert_eq!(alliance_stdin(&["compute", "--input", "-"], "3 2\n0 1\n1 0\n").status.code(), Some(2));
    assert_eq!(alliance(&["compute", "--family", "nonsense:3"]).status.code(), Some(2));
    assert_eq!(alliance(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(alliance(&["compute"]).status.code(), Some(2));

    let big = alliance(&["compute", "--family", "cycle:21"]);
    assert_eq!(big.status.code(), Some(3));
    assert!(stderr(&big).contains("--max-n"));
    assert_eq!(alliance(&["compute", "--family", "cycle:21", "--max-n", "21"]).status.code(), Some(0));
    assert_eq!(alliance(&["compute", "--family", "cycle:25", "--engine", "oracle", "--max-n", "30"]).status.code(), Some(3));
    assert_eq!(alliance(&["compute", "--family", "complete:40", "--budget", "0.05"]).status.code(), Some(3));
    assert_eq!(alliance(&["search", "--max-n", "11"]).status.code(), Some(3));
    assert_eq!(alliance(&["verify", "double_star", "--printed-form", "--max-n", "6"]).status.code(), Some(4));
    assert_eq!(alliance(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(alliance(&["--help"]).status.code(), Some(0));
}

#[test]
fn lenient_duplicates_warn() {
    let o = alliance_stdin(&["compute", "--input", "-", "--lenient"], "3 3\n0 1\n1 0\n1 2\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x^3 + 2x^2\n");
    assert!(stderr(&o).contains("duplicate edge"));
}

#[test]
fn compute_json_round_trip() {
    let o = alliance(&["compute", "--input", &data("seven.txt"), "--json"]);
    let wire: ReportJson = serde_json::from_str(&stdout(&o)).unwrap();
    let report = wire.to_report().unwrap();
    assert_eq!(ReportJson::from(&report), wire);
    assert!(!report.verdict.unimodal);
    assert_eq!(report.alliance_number, 2);
    assert_eq!(report.total_alliances, 17u32.into());
    assert!(report.checks.all_hold());
}

#[test]
fn family_command() {
    let o = alliance(&["family", "--family", "complete:5"]);
    assert_eq!(stdout(&o), "x^5 + 5x^4 + 10x^3\n");
    let o = alliance(&["family", "--family", "double_star:3,3", "--printed-form"]);
    assert_eq!(stdout(&o), "x^6 + 4x^5 + 4x^4 + 2x^3 + 4x^2 - 4x\n");
    assert_eq!(alliance(&["family", "--family", "path:4", "--printed-form"]).status.code(), Some(2));
    assert_eq!(alliance(&["family", "--family", "complete_minus_matching:5,1"]).status.code(), Some(2));

    let o = alliance(&["family", "--family", "cycle:6", "--json"]);
    let wire: FamilyJson = serde_json::from_str(&stdout(&o)).unwrap();
    let report = wire.report.as_ref().unwrap().to_report().unwrap();
    assert_eq!(wire.polynomial.to_polynomial().unwrap(), report.polynomial);
    assert_eq!(report.verdict.mode_index, Some(2));
    assert_eq!(serde_json::to_string(&wire).unwrap().trim(), stdout(&o).trim());

    let o = alliance(&["family", "--family", "double_star:3,3", "--printed-form", "--json"]);
    let wire: FamilyJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(wire.report.is_none());
    assert_eq!(wire.polynomial.coeffs[&1], "-4");
}

#[test]
fn check_command() {
    let o = alliance(&["check", "--input", &data("seven.txt")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("unimodal: false"));
    assert!(text.contains("a2_eq_1_iff_unique_light_edge: PASS"));
    assert!(text.contains("engines_agree: PASS"));

    let o = alliance(&["check", "--family", "cycle:7", "--json"]);
    let wire: CheckJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(wire.engines_agree, Some(true));
    let report = wire.report.to_report().unwrap();
    assert_eq!(report.polynomial.coeff(2), 7u32.into());
    assert_eq!(serde_json::to_string(&wire).unwrap().trim(), stdout(&o).trim());
}

#[test]
fn verify_examples() {
    for sweep in ["families", "knm", "double_star", "kn_minus_edges", "theorem26"] {
        let o = alliance(&["verify", sweep, "--max-n", "10", "--count", "20"]);
        assert_eq!(o.status.code(), Some(0), "{sweep}: {}", stderr(&o));
        assert!(!stdout(&o).contains("FAIL"), "{sweep}");
    }
    let o = alliance(&["verify", "kn_minus_edges", "--max-n", "10"]);
    assert!(stdout(&o).contains("PASS complete_minus_matching:9,1"));

    let o = alliance(&["verify", "double_star", "--max-n", "12", "--printed-form"]);
    assert_eq!(o.status.code(), Some(4));
    let text = stdout(&o);
    assert!(text.contains("FAIL double_star:3,3"));
    assert!(text.contains("first counterexample: double_star:3,3"));
    assert!(stderr(&o).contains("x^6 + 4x^5 + 4x^4 + 2x^3"));
}

#[test]
fn verify_json_round_trip() {
    let o = alliance(&["verify", "double_star", "--max-n", "8", "--printed-form", "--json"]);
    let summary: Summary = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(summary.printed_form);
    assert_eq!(summary.failed + summary.passed, summary.instances.len());
    assert_eq!(serde_json::to_string(&summary).unwrap().trim(), stdout(&o).trim());
}

#[test]
fn search_examples() {
    let o = alliance(&["search", "--input", &data("seven.txt")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("x^7 + 5x^6 + 6x^5 + x^4 + 3x^3 + x^2"));
    assert!(text.contains("examined 1 graphs, 1 not unimodal"));

    let o = alliance(&["search", "--corpus", "paths-cycles", "--min-n", "1", "--max-n", "10"]);
    assert!(stdout(&o).contains("not unimodal") && stdout(&o).contains(", 0 not unimodal"));

    let args = ["search", "--max-n", "7", "--count", "100", "--seed", "9", "--json"];
    let first = stdout(&alliance(&args));
    assert_eq!(first, stdout(&alliance(&args)));
    let result: SearchResult = serde_json::from_str(&first).unwrap();
    assert_eq!(result.examined, 100);
    for f in &result.findings {
        let p: AlliancePolynomial = f.polynomial.to_polynomial().unwrap();
        assert!(!strong_alliance::sequence_verdict(&p).unwrap().unimodal);
    }
    assert_eq!(serde_json::to_string(&result).unwrap().trim(), first.trim());
}

#[test]
fn search_output_is_reparseable_edge_list() {
    let o = alliance(&["search", "--input", &data("seven.txt")]);
    let g = alliance_tools::edge_list::parse(&stdout(&o), true).unwrap().graph;
    assert_eq!(g, alliance_tools::corpus::seven_vertex_example());
}
