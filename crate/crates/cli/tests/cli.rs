use std::process::{Command, Output};

use grammar_calculus::{builtin, Polynomial};
use serde_json::Value;

fn gcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcalc"))
        .args(args)
        .env_remove("GCALC_CAP_COPS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn derive_prints_canonical_expansions() {
    let o = gcalc(&["derive", "--builtin", "g1", "--n", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "x + 3*x*y + x*y^2 + x^2*y\n");

    let o = gcalc(&[
        "derive",
        "--grammar",
        "x -> x + x*y; y -> y + x*y",
        "--n",
        "0",
    ]);
    assert_eq!(stdout(&o), "x\n");

    let o = gcalc(&[
        "derive",
        "--grammar",
        "x -> x + x*y + x^2; y -> y + y^2 + x*y",
        "--n",
        "1",
    ]);
    assert_eq!(stdout(&o), "x + x*y + x^2\n");

    let o = gcalc(&[
        "derive",
        "--builtin",
        "g5",
        "--start",
        "x*y",
        "--n",
        "1",
        "--juxtaposed",
    ]);
    assert_eq!(stdout(&o), "2xy + xy^3 + x^3y\n");
}

#[test]
fn derive_json_round_trips() {
    let o = gcalc(&["derive", "--builtin", "g4", "--n", "3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let parsed: Polynomial = serde_json::from_str(&stdout(&o)).unwrap();
    let direct = builtin::stirling_binomial()
        .derive_n(&Polynomial::letter("x"), 3)
        .unwrap();
    assert_eq!(parsed, direct);
}

#[test]
fn derive_csv_has_one_column_per_letter() {
    let o = gcalc(&[
        "derive",
        "--builtin",
        "g1",
        "--n",
        "1",
        "--all-levels",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&o), "n,x,y,value\n0,1,0,1\n1,1,0,1\n1,1,1,1\n");
}

#[test]
fn triangles() {
    let o = gcalc(&[
        "triangle",
        "type_b_eulerian",
        "--nmax",
        "3",
        "--format",
        "json",
    ]);
    let rows: Vec<Vec<u64>> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.last().unwrap(), &[1, 23, 23, 1]);

    let o = gcalc(&["triangle", "matching", "--nmax", "2", "--format", "json"]);
    let rows: Vec<Vec<u64>> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows[2], [0, 2, 1]);

    let o = gcalc(&["triangle", "stirling2", "--nmax", "0", "--format", "json"]);
    let rows: Vec<Vec<u64>> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows, [[1]]);

    let o = gcalc(&["triangle", "left_peak", "--nmax", "4", "--format", "csv"]);
    assert!(stdout(&o).starts_with("n,k,value\n0,0,1\n"));
    assert!(stdout(&o).contains("4,1,18\n"));

    let o = gcalc(&["triangle", "whitney:2", "--nmax", "2"]);
    assert_eq!(stdout(&o), "0: 1\n1: 1 1\n2: 1 4 1\n");
}

#[test]
fn big_entries_stay_exact_in_json() {
    let o = gcalc(&["triangle", "stirling2", "--nmax", "60", "--format", "json"]);
    assert_eq!(code(&o), 0);
    // S(60, 30) is far beyond 2^53.
    let text = stdout(&o);
    let last = text.lines().rev().nth(1).unwrap();
    let want = grammar_calculus::triangles::stirling2(60, 30).to_string();
    assert!(last.contains(&want));
}

#[test]
fn cops_and_stats() {
    let o = gcalc(&["cops", "--n", "3"]);
    assert_eq!(
        stdout(&o),
        "(123)\n(1)(23)\n(12)(3)\n(13)(2)\n(1)(2)(3)\n(1)(3)(2)\n"
    );

    let o = gcalc(&["stats", "--stat", "descents", "--n", "3", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "n,i,j,value\n3,1,0,1\n3,2,0,3\n3,3,0,1\n3,3,1,1\n"
    );
}

#[test]
fn verify_exit_codes() {
    let o = gcalc(&["verify", "--suite", "all", "--nmax", "6"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));

    let o = gcalc(&["verify", "--suite", "T1", "--nmax", "1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let reports: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(reports[0]["checks_run"].as_u64().unwrap() >= 3);
    assert_eq!(reports[0]["status"], "pass");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mutated.g");
    std::fs::write(
        &path,
        "# one coefficient changed\nx -> x + x*y;\ny -> y + 2*x^2;\n",
    )
    .unwrap();
    let o = gcalc(&[
        "verify",
        "--suite",
        "T2",
        "--nmax",
        "4",
        "--grammar",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 1);
    let reports: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(reports[0]["first_failure"].is_object());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        code(&gcalc(&["derive", "--grammar", "x -> x + y", "--n", "1"])),
        2
    );
    assert_eq!(
        code(&gcalc(&["derive", "--grammar", "x -> (x", "--n", "1"])),
        2
    );
    assert_eq!(code(&gcalc(&["derive", "--builtin", "g9", "--n", "1"])), 2);
    assert_eq!(code(&gcalc(&["triangle", "catalan", "--nmax", "3"])), 2);
    assert_eq!(code(&gcalc(&["verify", "--suite", "T5", "--nmax", "8"])), 2);
    assert_eq!(code(&gcalc(&["verify", "--suite", "T9"])), 2);
    assert_eq!(code(&gcalc(&["cops", "--n", "9"])), 2);
    assert_eq!(code(&gcalc(&["derive", "--builtin", "g1", "--n", "25"])), 2);
    assert_eq!(code(&gcalc(&["derive", "--n", "1"])), 2);
    let o = gcalc(&["derive", "--grammar", "x -> (x", "--n", "1"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:8"));
}

#[test]
fn caps_from_file_and_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("caps.txt");
    std::fs::write(&cfg, "cops = 3\n").unwrap();
    let o = gcalc(&["cops", "--n", "4", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&o), 2);

    let o = Command::new(env!("CARGO_BIN_EXE_gcalc"))
        .args(["cops", "--n", "3", "--config", cfg.to_str().unwrap()])
        .env("GCALC_CAP_COPS", "2")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2, "environment overrides the file");
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap of 2"));
}

#[test]
fn out_flag_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let args = [
        "verify", "--suite", "all", "--nmax", "3", "--format", "json",
    ];
    let a = gcalc(&args);
    let b = gcalc(&args);
    assert_eq!(a.stdout, b.stdout);

    let o = gcalc(&[
        "triangle",
        "eulerian",
        "--nmax",
        "3",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("n,k,value\n"));
}
