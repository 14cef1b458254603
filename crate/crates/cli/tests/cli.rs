//! Behavior tests for the command-line surface: exit codes, file handling,
//! formats, and the serialization round trips.

use std::path::PathBuf;
use std::process::{Command, Output};

use partex::rational::parse_rational;
use partex::sequences::{partition_count, seed_from_flavor};
use partex::toeplitz::{seed_matrix, toeplitz_exp};
use partex::{BandMatrix, DivisorFlavor};

fn partex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partex"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 output")
}

fn temp_file(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("partex-test-{}-{name}", std::process::id()));
    std::fs::write(&path, content).expect("temp file writable");
    path
}

#[test]
fn exp_of_the_trivial_seed_file() {
    let path = temp_file("trivial-seed", "0\n");
    let output = partex(&["exp", "--file", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout_of(&output), "1\n");
}

#[test]
fn log_recovers_hand_computed_seeds() {
    let path = temp_file("log-input", "1\n2\n0\n");
    let output = partex(&["log", "--file", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout_of(&output), "0\n2\n-4\n");

    let trivial = temp_file("log-trivial", "1\n");
    let output = partex(&["log", "--file", trivial.to_str().unwrap()]);
    assert_eq!(stdout_of(&output), "0\n");
}

#[test]
fn exp_then_log_round_trips_through_files() {
    let exp = partex(&["exp", "--seed", "sigma", "--order", "9"]);
    assert_eq!(exp.status.code(), Some(0));
    let path = temp_file("round-trip", &stdout_of(&exp));
    let log = partex(&["log", "--file", path.to_str().unwrap()]);
    assert_eq!(log.status.code(), Some(0));
    assert_eq!(stdout_of(&log), "0\n1\n3\n4\n7\n6\n12\n8\n15\n");
}

#[test]
fn seed_file_must_start_with_zero() {
    let path = temp_file("bad-seed", "3\n1\n");
    let output = partex(&["exp", "--file", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    assert!(
        stderr_of(&output).contains("s_0 = 0"),
        "stderr was: {}",
        stderr_of(&output)
    );
}

#[test]
fn transformed_file_must_start_with_one() {
    let path = temp_file("bad-transform", "2\n1\n");
    let output = partex(&["log", "--file", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("t_0 = 1"));
}

#[test]
fn sequence_files_report_the_offending_line() {
    let path = temp_file("bad-line", "0\n1\nnot-a-number\n");
    let output = partex(&["exp", "--file", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains(":3:"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["exp", "--seed", "sigma"][..],                // missing --order
        &["exp", "--order", "5"][..],                   // no source
        &["exp", "--seed", "sigma", "--file", "x"][..], // two sources
        &["exp", "--seed", "sigma-not-div:1", "--order", "3"][..], // bad modulus
        &["table", "--kind", "p", "--n", "4", "--not-div", "1"][..],
        &["partitions", "--n", "0"][..],
        &["partitions", "--n", "4", "--parts", "0"][..],
        &["log", "--file", "/nonexistent/partex-test"][..],
        &["table", "--kind", "nonsense", "--n", "3"][..],
    ] {
        let output = partex(args);
        assert_eq!(output.status.code(), Some(2), "args: {args:?}");
    }
}

#[test]
fn log_order_cannot_exceed_the_file() {
    let path = temp_file("short-transform", "1\n1\n");
    let output = partex(&["log", "--file", path.to_str().unwrap(), "--order", "5"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("exceeds"));
}

#[test]
fn exp_order_cannot_exceed_the_file() {
    let path = temp_file("short-seed", "0\n1\n");
    let output = partex(&["exp", "--file", path.to_str().unwrap(), "--order", "5"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("exceeds"));
}

#[test]
fn matrix_json_round_trips() {
    let output = partex(&["exp", "--seed", "sigma", "--order", "7", "--matrix"]);
    assert_eq!(output.status.code(), Some(0));
    let reparsed = BandMatrix::from_json(stdout_of(&output).trim()).expect("valid JSON");
    let seed = seed_from_flavor(6, DivisorFlavor::All);
    let expected = toeplitz_exp(&seed_matrix(&seed, 7).unwrap()).unwrap();
    assert_eq!(reparsed, expected);
}

#[test]
fn json_sequences_parse_back_to_the_band() {
    let output = partex(&[
        "exp",
        "--seed",
        "sigma-odd",
        "--order",
        "8",
        "--format",
        "json",
    ]);
    let values: Vec<String> = serde_json::from_str(stdout_of(&output).trim()).unwrap();
    let counts = partition_count(7, DivisorFlavor::Odd).unwrap();
    assert_eq!(values.len(), counts.len());
    for (text, expected) in values.iter().zip(counts) {
        let parsed = parse_rational(text).unwrap();
        assert_eq!(parsed, expected.into());
    }
}

#[test]
fn csv_and_json_table_formats() {
    let csv = partex(&["table", "--kind", "p", "--n", "3", "--format", "csv"]);
    assert_eq!(stdout_of(&csv), "index,value\n0,1\n1,1\n2,2\n3,3\n");

    let json = partex(&[
        "table",
        "--kind",
        "sigma-bar",
        "--n",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(stdout_of(&json), "[\"1\",\"3/2\",\"4/3\",\"7/4\"]\n");
}

#[test]
fn not_div_seeds_and_tables() {
    let table = partex(&["table", "--kind", "sigma", "--not-div", "3", "--n", "6"]);
    assert_eq!(stdout_of(&table), "1 1\n2 3\n3 1\n4 7\n5 6\n6 3\n");

    // counts of partitions into parts not divisible by 3
    let exp = partex(&["exp", "--seed", "sigma-not-div:3", "--order", "11"]);
    assert_eq!(stdout_of(&exp), "1\n1\n2\n2\n4\n5\n7\n9\n13\n16\n22\n");
}

#[test]
fn partition_listings() {
    let plain = partex(&["partitions", "--n", "3"]);
    assert_eq!(stdout_of(&plain), "3\n2+1\n1+1+1\ncount 3\n");

    let odd = partex(&["partitions", "--n", "4", "--odd"]);
    assert_eq!(stdout_of(&odd), "3+1\n1+1+1+1\ncount 2\n");

    let pairs = partex(&["partitions", "--n", "4", "--parts", "2"]);
    assert_eq!(stdout_of(&pairs), "3+1\n2+2\ncount 2\n");

    let csv = partex(&["partitions", "--n", "4", "--parts", "2", "--format", "csv"]);
    assert_eq!(stdout_of(&csv), "index,partition\n0,3+1\n1,2+2\ncount,2\n");

    let json = partex(&["partitions", "--n", "4", "--odd", "--format", "json"]);
    let document: serde_json::Value = serde_json::from_str(stdout_of(&json).trim()).unwrap();
    assert_eq!(document["count"], 2);
    assert_eq!(document["partitions"][0], "3+1");
    assert_eq!(document["partitions"][1], "1+1+1+1");
}

#[test]
fn verify_report_lists_every_check_once() {
    let output = partex(&["verify", "--max-n", "8", "--order", "6"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert_eq!(text.lines().filter(|l| l.starts_with("ok   ")).count(), 18);
    assert_eq!(text.lines().filter(|l| l.starts_with("FAIL")).count(), 0);
}
