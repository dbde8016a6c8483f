//! End-to-end tests of the `ocd` binary: output shapes and the exit-code
//! contract (0 ok, 1 not an ocd-set, 2 bad input, 3 brute guard, 4
//! engine mismatch).

use std::io::Write;
use std::process::{Command, Stdio};

const P4: &str = "4 3\n0 1\n1 2\n2 3\n";

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ocd"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn ocd");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let output = child.wait_with_output().expect("wait for ocd");
    (
        output.status.code().expect("exit code"),
        String::from_utf8(output.stdout).unwrap(),
        String::from_utf8(output.stderr).unwrap(),
    )
}

#[test]
fn compute_p4_fast_text() {
    let (code, stdout, _) = run(&["compute"], P4);
    assert_eq!(code, 0);
    assert!(stdout.contains("polynomial: x^4 + 4x^3 + x^2"), "{stdout}");
    assert!(stdout.contains("min_degree: 2"));
    assert!(stdout.contains("total_ocd_sets: 6"));
}

#[test]
fn compute_k1_any_engine() {
    for engine in ["brute", "fast", "both"] {
        let (code, stdout, _) = run(&["compute", "--engine", engine], "1 0\n");
        assert_eq!(code, 0);
        assert!(stdout.contains("polynomial: x\n"), "{stdout}");
        assert!(stdout.contains("min_degree: 1"));
        assert!(stdout.contains("total_ocd_sets: 1"));
    }
}

#[test]
fn compute_both_prints_matching_results() {
    let (code, stdout, _) = run(&["compute", "--engine", "both"], P4);
    assert_eq!(code, 0);
    assert_eq!(stdout.matches("polynomial: x^4 + 4x^3 + x^2").count(), 2);
    assert!(stdout.contains("engines agree: true"));
}

#[test]
fn compute_json_validates_against_schema() {
    let (code, stdout, _) = run(&["compute", "--output", "json"], P4);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["engine"], "fast");
    assert_eq!(doc["min_degree"], 2);
    assert_eq!(doc["total"], "6");
    let poly = ocd_core::OcdPolynomial::from_json(&doc["polynomial"].to_string()).unwrap();
    assert_eq!(poly.to_string(), "x^4 + 4x^3 + x^2");
    assert!(doc["stats"]["candidates_visited"].is_u64());
}

#[test]
fn compute_reads_graph6() {
    let (code, stdout, _) = run(&["compute", "--format", "graph6"], "Bw\n");
    assert_eq!(code, 0);
    assert!(stdout.contains("polynomial: x^3 + 3x^2 + 3x"), "{stdout}");
}

#[test]
fn compute_rejects_bad_input_with_exit_2() {
    let (code, _, stderr) = run(&["compute"], "3 1\n0 9\n");
    assert_eq!(code, 2);
    assert!(stderr.contains("line 2"), "{stderr}");
}

#[test]
fn compute_brute_guard_is_exit_3() {
    let (code, _, stderr) = run(&["compute", "--engine", "brute"], "26 0\n");
    assert_eq!(code, 3);
    assert!(stderr.contains("brute-force guard"), "{stderr}");
}

#[test]
fn check_ocd_set_exits_zero() {
    let (code, stdout, _) = run(&["check", "--set", "0,3"], P4);
    assert_eq!(code, 0);
    assert!(stdout.contains("ocd: true"));
}

#[test]
fn check_reports_split_witness_and_exits_one() {
    let (code, stdout, _) = run(&["check", "--set", "1,2"], P4);
    assert_eq!(code, 1);
    assert!(stdout.contains("dominating: true"));
    assert!(stdout.contains("outer_connected: false"));
    assert!(
        stdout.contains("complement vertices 0 and 3 lie in different components"),
        "{stdout}"
    );
}

#[test]
fn check_full_vertex_set_is_ocd() {
    let (code, stdout, _) = run(&["check", "--set", "0,1,2,3"], P4);
    assert_eq!(code, 0);
    assert!(stdout.contains("ocd: true"));
}

#[test]
fn check_rejects_bad_indices_with_exit_2() {
    let (code, _, _) = run(&["check", "--set", "9"], P4);
    assert_eq!(code, 2);
    let (code, _, stderr) = run(&["check", "--set", "1,1"], P4);
    assert_eq!(code, 2);
    assert!(stderr.contains("duplicate"), "{stderr}");
}

#[test]
fn family_closed_forms() {
    let (code, stdout, _) = run(&["family", "--name", "path", "--n", "5"], "");
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "x^5 + 5x^4 + 2x^3");

    let (code, stdout, _) = run(&["family", "--name", "complete", "--n", "4"], "");
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "x^4 + 4x^3 + 6x^2 + 4x");
}

#[test]
fn family_star_verify_passes() {
    let (code, stdout, _) = run(
        &["family", "--name", "star", "--leaves", "4", "--verify"],
        "",
    );
    assert_eq!(code, 0);
    assert!(stdout.contains("x^5 + 5x^4"));
    assert!(stdout.contains("verify: fast engine agrees"));
}

#[test]
fn family_rejects_bad_parameters_with_exit_2() {
    let (code, _, stderr) = run(&["family", "--name", "cycle", "--n", "2"], "");
    assert_eq!(code, 2);
    assert!(stderr.contains("n >= 3"), "{stderr}");

    let (code, _, _) = run(&["family", "--name", "kab", "--a", "3"], "");
    assert_eq!(code, 2);
}

#[test]
fn family_json_output() {
    let (code, stdout, _) = run(
        &["family", "--name", "kab", "--a", "2", "--b", "2", "--output", "json"],
        "",
    );
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["family"], "kab");
    assert_eq!(doc["vertices"], 4);
    let poly = ocd_core::OcdPolynomial::from_json(&doc["polynomial"].to_string()).unwrap();
    // K(2,2) = C4.
    assert_eq!(poly.to_string(), "x^4 + 4x^3 + 4x^2");
}

fn strip_seconds(csv: &str) -> Vec<String> {
    csv.lines()
        .map(|l| l.rsplit_once(',').unwrap().0.to_string())
        .collect()
}

#[test]
fn bench_csv_is_deterministic_modulo_seconds() {
    let args = ["bench", "--output", "csv", "--seed", "7", "--reps", "2"];
    let (code_a, run_a, _) = run(&args, "");
    let (code_b, run_b, _) = run(&args, "");
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert_eq!(
        run_a.lines().next().unwrap(),
        "graph_id,n,edges,engine,candidates,ocd_sets,seconds"
    );
    assert_eq!(strip_seconds(&run_a), strip_seconds(&run_b));
}

#[test]
fn bench_family_sweep_rows() {
    let (code, stdout, _) = run(
        &["bench", "--name", "path", "--n", "12", "--output", "csv"],
        "",
    );
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 1 + 12);
    // Path(12): the pruned walk visits 3n-4 candidate complements — the
    // n intervals of length 1, the n-1 of length 2, and one trapped
    // extension past each of the n-3 interior length-2 intervals.
    let row: Vec<&str> = lines[12].split(',').collect();
    assert_eq!(row[0], "path-12");
    assert_eq!(row[1], "12");
    assert_eq!(row[4], "32");
}
