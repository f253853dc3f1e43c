//! End-to-end checks of the binary: exact output formats, exit codes,
//! batch input, and determinism across thread counts.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use edgebetti::graph6::encode;
use edgebetti::graph::cycle;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgebetti"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_edgebetti"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn chic_prints_the_exact_witness_line() {
    let c7 = encode(&cycle(7).unwrap());
    assert_eq!(stdout(&run(&["chic", &c7])), "4; witnessing: (3,0) (2,1)\n");
}

#[test]
fn clusters_prints_five_specs_for_k4() {
    let out = stdout(&run(&["clusters", "--k", "4"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        ["c(2,2,2,2)", "c(2,2,2,3)", "c(2,2,2,4)", "c(2,2,3,3)", "c(2,2,3,4)"]
    );
}

#[test]
fn betti_on_the_empty_graph_notes_the_zero_ideal() {
    let out = stdout(&run(&["betti", "D??"]));
    assert!(out.contains("zero ideal"), "{out}");
}

#[test]
fn usage_and_capacity_exit_codes() {
    let out = run(&["betti", "thisisnotgraph6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());

    let out = run(&["clusters", "--k", "99"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["no-such-verb"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_errors_are_machine_readable() {
    let out = run(&["--format", "json", "betti", "thisisnotgraph6"]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["exit"], 2);
    assert!(v["error"].as_str().unwrap().contains("graph6"));
}

#[test]
fn betti_json_round_trips() {
    let c5 = encode(&cycle(5).unwrap());
    let out = stdout(&run(&["--format", "json", "betti", &c5]));
    let table: edgebetti::BettiTable = serde_json::from_str(&out).unwrap();
    let again = serde_json::to_string(&table).unwrap();
    let reparsed: edgebetti::BettiTable = serde_json::from_str(&again).unwrap();
    assert_eq!(table, reparsed);
    assert_eq!(table.entry(2, 5), 1);
}

#[test]
fn batch_stdin_tags_each_graph() {
    let c5 = encode(&cycle(5).unwrap());
    let c7 = encode(&cycle(7).unwrap());
    let input = format!("{c5}\n{c7}\n");

    let out = stdout(&run_stdin(&["reg"], &input));
    assert_eq!(out, format!("# {c5}\n3\n# {c7}\n3\n"));

    let out = stdout(&run_stdin(&["--format", "json", "reg"], &input));
    let lines: Vec<serde_json::Value> =
        out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["graph"], c5.as_str());
    assert_eq!(lines[1]["regularity"], 3);
}

#[test]
fn census_output_is_independent_of_jobs() {
    let args = ["census", "--r", "3", "--p", "0", "--nmin", "1", "--nmax", "6"];
    let one = stdout(&run_stdin(&[&args[..], &["--jobs", "1"]].concat(), ""));
    let four = stdout(&run_stdin(&[&args[..], &["--jobs", "4"]].concat(), ""));
    assert_eq!(one, four);
    assert!(one.starts_with("n,r,p,graphs,"));
}

#[test]
fn heawood_demo_reports_a_clean_diff() {
    let out = stdout(&run(&["heawood-demo"]));
    assert!(out.contains("all 19 reference entries match"), "{out}");
}
