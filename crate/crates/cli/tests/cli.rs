use std::io::Write;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("irrmeasure").chain(args.iter().copied());
    let code = irrmeasure_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn records(out: &str) -> Vec<Value> {
    out.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn report<'a>(rec: &'a Value, theorem: &str) -> &'a Value {
    rec["result"]["reports"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["theorem"] == theorem)
        .unwrap()
}

fn temp_file(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("irrmeasure-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
    path
}

#[test]
fn measure_real_reports_7020() {
    let (code, out, err) = run(&["measure-real", "--a", "100", "--b", "90", "--n", "1000000"]);
    assert_eq!(code, 0, "{err}");
    let rec = &records(&out)[0];
    assert_eq!(rec["status"], "ok");
    assert_eq!(rec["result"]["best"]["hi"], "7020");
    assert_eq!(rec["result"]["best_theorem"], "T2.1");
    assert_eq!(report(rec, "T2.1")["bound"]["hi"], "7020");
    assert_eq!(rec["tool"], "irrmeasure");
    assert_eq!(rec["precision"], "128");
}

#[test]
fn measure_real_outside_window_exits_2() {
    let (code, out, _) = run(&["measure-real", "--a", "20", "--b", "10", "--n", "5", "--ledger"]);
    assert_eq!(code, 2);
    let rec = &records(&out)[0];
    assert_eq!(rec["status"], "inapplicable");
    let t21 = report(rec, "T2.1");
    assert!(t21["failed_conditions"].as_array().unwrap().iter().any(|c| c == "a < 6b/5"));
    let ledger = t21["conditions"].as_array().unwrap();
    assert!(ledger.iter().any(|c| c["name"] == "a < 6b/5" && c["status"] == "fail"));
}

#[test]
fn hensel_residue() {
    let (code, out, _) = run(&["hensel", "--a", "6", "--b", "1", "--p", "5", "--n", "3", "--k", "2"]);
    assert_eq!(code, 0);
    let rec = &records(&out)[0];
    assert_eq!(rec["result"]["residue"], "11");
    assert_eq!(rec["result"]["modulus"], "25");
}

#[test]
fn hensel_without_root_exits_2() {
    let (code, out, _) = run(&["hensel", "--a", "7", "--b", "1", "--p", "5", "--n", "3", "--k", "2"]);
    assert_eq!(code, 2);
    assert_eq!(records(&out)[0]["result"]["applicable"], false);
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["measure-real", "--a", "x", "--b", "1", "--n", "3"]).0, 1);
    assert_eq!(run(&["measure-real", "--a", "2", "--b", "1"]).0, 1);
    assert_eq!(run(&["no-such-command"]).0, 1);
    let (code, _, err) = run(&["measure-real", "--a", "2", "--b", "1", "--n", "3", "--precision", "32"]);
    assert_eq!(code, 1);
    assert!(err.contains("64..=4096"));
    let (code, out, err) = run(&["measure-real", "--a", "0", "--b", "1", "--n", "3"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    let diag: Value = serde_json::from_str(err.lines().next().unwrap()).unwrap();
    assert_eq!(diag["error"], "invalid-input");
}

#[test]
fn inline_and_input_together_is_rejected() {
    let path = temp_file("both.jsonl", "{\"a\": 2, \"b\": 1, \"n\": 3}\n");
    let (code, _, err) = run(&["measure-real", "--a", "2", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("not both"));
}

#[test]
fn batch_preserves_order_and_reports_bad_lines() {
    let body = "{\"a\": 100, \"b\": 90, \"n\": 1000000}\n\n{\"a\": \"20\", \"b\": 10, \"n\": 5}\n{\"a\": 1.5, \"b\": 1, \"n\": 3}\n{\"a\": 101, \"b\": 100, \"n\": \"10000\"}\n";
    let path = temp_file("order.jsonl", body);
    let (code, out, err) = run(&["measure-real", "--input", path.to_str().unwrap(), "--jobs", "4"]);
    assert_eq!(code, 1);
    let recs = records(&out);
    let lines: Vec<_> = recs.iter().map(|r| r["line"].as_str().unwrap().to_string()).collect();
    assert_eq!(lines, ["1", "2", "4"]);
    assert_eq!(recs[1]["status"], "inapplicable");
    let diag: Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(diag["line"], "3");
    assert!(diag["message"].as_str().unwrap().contains("floating-point"));
}

#[test]
fn output_independent_of_jobs() {
    let mut body = String::new();
    for n in [3u64, 5, 7, 100, 1000, 1_000_000] {
        for (a, b) in [(101u64, 100u64), (1001, 1000), (33, 31), (1009, 1000)] {
            body.push_str(&format!("{{\"a\": {a}, \"b\": {b}, \"n\": {n}}}\n"));
        }
    }
    let path = temp_file("jobs.jsonl", &body);
    let p = path.to_str().unwrap();
    let one = run(&["measure-real", "--input", p, "--jobs", "1"]);
    let eight = run(&["measure-real", "--input", p, "--jobs", "8"]);
    assert_eq!(one, eight);
    assert_eq!(records(&one.1).len(), 24);
}

#[test]
fn table_format() {
    let (code, out, _) = run(&["measure-padic", "--a", "26", "--b", "1", "--p", "5", "--n", "3", "--format", "table"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# measure-padic [1] a=26 b=1 n=3 p=5 (precision 128, version"));
    assert!(out.contains("C3.2"));
    assert!(out.contains("< 1722"));
}

#[test]
fn tm_commands() {
    let base = ["--b", "1000", "--c", "9", "--n", "25", "--primes", "3", "--eta", "3/10"];
    let mut args = vec!["tm-search", "--d", "1", "--limit-x", "20"];
    args.extend(base);
    let (code, out, _) = run(&args);
    assert_eq!(code, 0);
    let r = &records(&out)[0]["result"];
    assert_eq!(r["solutions"][0]["z"][0], "2");
    assert_eq!(r["all_xy_at_most_1"], true);

    let mut args = vec!["tm-check", "--d", "1"];
    args.extend(base);
    assert_eq!(run(&args).0, 0);
    let args = ["tm-check", "--d", "1", "--b", "1000", "--c", "9", "--n", "25", "--primes", "3", "--eta", "1/2"];
    assert_eq!(run(&args).0, 2);
}

#[test]
fn linear_forms_and_scans() {
    let (code, out, _) = run(&[
        "linform-arch", "--a1", "101", "--a2", "100", "--b1", "103", "--b2", "102", "--u", "5", "--v", "7",
        "--height-a", "101", "--height-b", "103",
    ]);
    assert_eq!(code, 0);
    assert_eq!(records(&out)[0]["result"]["stronger"], "bound_52");

    let (code, out, _) = run(&["linform-padic", "--x1", "6", "--y1", "1", "--x2", "11", "--y2", "2", "--b", "3", "--p", "5", "--e", "1"]);
    assert_eq!(code, 0);
    assert!(records(&out)[0]["result"]["bound"]["hi"].as_str().unwrap().starts_with("1427.78"));

    let (code, out, _) = run(&["cf-verify", "--a", "2", "--b", "1", "--n", "3", "--count", "7"]);
    assert_eq!(code, 0);
    let q: Vec<_> = records(&out)[0]["result"]["quotients"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect();
    assert_eq!(q, ["1", "3", "1", "5", "1", "1", "4"]);

    let (code, out, _) = run(&["padic-verify", "--a", "26", "--b", "1", "--p", "5", "--n", "3", "--max-height", "30"]);
    assert_eq!(code, 0);
    assert_eq!(records(&out)[0]["result"]["check"]["below_bound"], true);
}

#[test]
fn binary_reads_precision_from_environment() {
    let exe = env!("CARGO_BIN_EXE_irrmeasure");
    let out = Command::new(exe)
        .args(["hensel", "--a", "6", "--b", "1", "--p", "5", "--n", "3", "--k", "2"])
        .env("IRRMEASURE_PRECISION", "256")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let rec: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rec["precision"], "256");

    let bad = Command::new(exe)
        .args(["hensel", "--a", "6", "--b", "1", "--p", "5", "--n", "3", "--k", "2"])
        .env("IRRMEASURE_PRECISION", "8192")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
