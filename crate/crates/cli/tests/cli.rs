use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use frobinj::AnalysisReport;
use frobinj_cli::commands::{BatchRecord, VerifyReport, WitnessRecord};
use serde_json::Value;
use tempfile::TempDir;

const QUARTIC: &str = "# plane quartic\np = 3\nvars = x, y, z\ngens = x^2*y^2 + y^2*z^2 + z^2*x^2\n";
const NODE: &str = "p = 5\nvars = x, y\ngens = x*y\n";
const DOUBLE: &str = "p = 3\nvars = x, y\ngens = x^2*y^2\n";
const FERMAT: &str = "p = 5\nvars = x, y, z\ngens = x^3 + y^3 + z^3\n";

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn frobinj(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_frobinj")).args(args).output().unwrap();
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_quartic() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "quartic.txt", QUARTIC);
    let r = frobinj(&["analyze", s(&f), "--json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["fpure_at_m"], false);
    assert_eq!(v["tau_class"], "isolated_non_f_pure_point");
    assert_eq!(v["ell"], 0);
    assert_eq!(v["a_invariant"], 1);
    assert_eq!(v["thmA_bound"], 1);
    assert_eq!(v["cor_bound"], -8);
    assert_eq!(v["thmB_threshold"], 6);
    assert_eq!(v["isolated_singularity"], false);
    // round trip
    let rep: AnalysisReport = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(serde_json::to_value(&rep).unwrap(), v);

    let text = frobinj(&["analyze", s(&f)]);
    assert_eq!(text.code, 0);
    assert!(text.stdout.contains("isolated non-F-pure point"));
}

#[test]
fn analyze_f_pure_omits_bound() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "node.txt", NODE);
    let r = frobinj(&["--json", "analyze", s(&f)]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["fpure_at_m"], true);
    assert_eq!(v["tau_class"], "everywhere_f_pure");
    assert!(v.get("thmA_bound").is_none());
}

#[test]
fn parse_errors_exit_2_with_position() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "bad.txt", "p = 3\nvars = x, y\ngens = x*y + y^\n");
    let r = frobinj(&["analyze", s(&f)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("bad.txt:3:"), "{}", r.stderr);
    assert!(!r.stderr.contains("panicked"));
    let f = write(dir.path(), "prime.txt", "p = 6\nvars = x\ngens = x\n");
    let r = frobinj(&["analyze", s(&f)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("prime.txt:1:5: 6 is not a prime"), "{}", r.stderr);
}

#[test]
fn invalid_sequences_exit_3() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "dup.txt", "p = 3\nvars = x, y, z\ngens = x*y, x*z\n");
    let r = frobinj(&["analyze", s(&f)]);
    assert_eq!(r.code, 3, "{}", r.stderr);
    let f = write(dir.path(), "inhom.txt", "p = 3\nvars = x, y\ngens = x + y^2\n");
    assert_eq!(frobinj(&["analyze", s(&f)]).code, 3);
}

#[test]
fn missing_file_is_io_error() {
    let r = frobinj(&["analyze", "/nonexistent/problem.txt"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.starts_with("error:"));
}

#[test]
fn witness_for_quartic() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "quartic.txt", QUARTIC);
    let r = frobinj(&["witness", s(&f), "--json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let w: WitnessRecord = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(w.degree, 1);
    assert_eq!(w.q, 3);
    assert_eq!(w.numerator, "x^2*y^2*z^2");
    assert!(w.frobenius_image_is_zero);
}

#[test]
fn witness_requires_m_primary_tau() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "node.txt", NODE);
    let r = frobinj(&["witness", s(&f)]);
    assert_eq!(r.code, 5);
    assert!(r.stderr.contains("everywhere F-pure"));
    let f = write(dir.path(), "double.txt", DOUBLE);
    let r = frobinj(&["witness", s(&f)]);
    assert_eq!(r.code, 5);
    assert!(r.stderr.contains("(x*y)"), "{}", r.stderr);
}

#[test]
fn verify_quartic_window() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "quartic.txt", QUARTIC);
    let r = frobinj(&["verify", s(&f), "--from", "-3", "--to", "2", "--json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: VerifyReport = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v.rows.len(), 6);
    let kernels: Vec<i64> = v.rows.iter().filter(|r| r.dim_kernel > 0).map(|r| r.degree).collect();
    assert_eq!(kernels, vec![1]);
    assert!(v.consistent && v.complete);

    let text = frobinj(&["verify", s(&f), "--from", "-3", "--to", "2"]);
    assert!(text.stdout.contains("consistency: PASS"));
}

#[test]
fn verify_fermat_cubic() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "fermat.txt", FERMAT);
    let r = frobinj(&["verify", s(&f), "--from=-3", "--to=-1", "--json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: VerifyReport = serde_json::from_str(&r.stdout).unwrap();
    assert!(v.negative_degrees_predicted);
    assert!(v.rows.iter().all(|r| r.dim_kernel == 0));
}

#[test]
fn verify_edge_cases() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "quartic.txt", QUARTIC);
    let r = frobinj(&["verify", s(&f), "--from", "3", "--to", "2", "--json"]);
    assert_eq!(r.code, 0);
    let v: VerifyReport = serde_json::from_str(&r.stdout).unwrap();
    assert!(v.rows.is_empty());
    assert_eq!(frobinj(&["verify", s(&f), "--from", "-30", "--to", "0"]).code, 2);
    assert_eq!(frobinj(&["verify", s(&f)]).code, 2);

    // window from the file
    let g = write(dir.path(), "windowed.txt", &format!("{}window = -1, 1\n", QUARTIC));
    let v: VerifyReport = serde_json::from_str(&frobinj(&["verify", s(&g), "--json"]).stdout).unwrap();
    assert_eq!(v.rows.len(), 3);

    // a tight column cap stops the table partway
    let r = frobinj(&["verify", s(&f), "--from", "-3", "--to", "1", "--max-cols", "40", "--json"]);
    assert_eq!(r.code, 4, "{}", r.stderr);
    let v: VerifyReport = serde_json::from_str(&r.stdout).unwrap();
    assert!(!v.complete);
}

#[test]
fn witness_respects_max_q() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "quartic.txt", QUARTIC);
    let r = frobinj(&["witness", s(&f), "--max-q", "1"]);
    assert_eq!(r.code, 4, "{}", r.stderr);
    assert!(r.stderr.contains("resource cap"));
    assert_eq!(frobinj(&["witness", s(&f), "--max-q", "3"]).code, 0);
    // the file can set the cap too
    let g = write(dir.path(), "capped.txt", &format!("{}max_q = 1\n", QUARTIC));
    assert_eq!(frobinj(&["witness", s(&g)]).code, 4);
}

#[test]
fn batch_corpus() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "b_node.txt", NODE);
    write(dir.path(), "a_quartic.txt", QUARTIC);
    write(dir.path(), "c_broken.txt", "p = 3\nvars = x\ngens = x +\n");
    let r = frobinj(&["batch", s(dir.path())]);
    assert_eq!(r.code, 0);
    let recs: Vec<BatchRecord> = r.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let names: Vec<&str> = recs.iter().map(|r| r.file.as_str()).collect();
    assert_eq!(names, vec!["a_quartic.txt", "b_node.txt", "c_broken.txt"]);
    assert!(recs[0].report.is_some() && recs[1].report.is_some());
    assert_eq!(recs[2].error.as_ref().unwrap().exit_code, 2);
    // repeated runs give identical output
    assert_eq!(frobinj(&["batch", s(dir.path())]).stdout, r.stdout);
}

#[test]
fn batch_edge_cases() {
    let dir = TempDir::new().unwrap();
    let r = frobinj(&["batch", s(dir.path())]);
    assert_eq!((r.code, r.stdout.as_str()), (0, ""));
    write(dir.path(), "bad.txt", "nonsense\n");
    assert_eq!(frobinj(&["batch", s(dir.path())]).code, 1);
}
