use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use frobinj::invariants::analyze;
use frobinj::localcoh::{kernel_witness, verify_injectivity};
use frobinj::{AnalysisReport, CompleteIntersection, InjectivityResult, Limits, TauClass, TauResult};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{exit, CliError};
use crate::problem::{self, ProblemFile};

pub const MAX_WINDOW: i64 = 20;

/// Resource flags shared by all commands.
#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub json: bool,
    pub max_q: Option<u64>,
    pub max_cols: Option<usize>,
}

impl Options {
    fn limits(&self, problem: &ProblemFile) -> Limits {
        let default = Limits::default();
        Limits { max_q: self.max_q.or(problem.max_q), max_cols: self.max_cols.unwrap_or(default.max_cols) }
    }
}

/// What a command writes and how the process should exit.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Output {
        Output { stdout, stderr: String::new(), code: exit::OK }
    }

    pub fn from_error(e: &CliError) -> Output {
        Output { stdout: String::new(), stderr: format!("error: {}\n", e), code: e.exit_code() }
    }
}

fn load(path: &Path) -> Result<(ProblemFile, CompleteIntersection), CliError> {
    let pf = problem::load(path).map_err(|e| CliError::load(path, e))?;
    let ci = pf.complete_intersection().map_err(|e| CliError::validation(path, e))?;
    Ok((pf, ci))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub fn render_report(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "a-invariant               {}", r.a_invariant);
    let _ = writeln!(s, "F-pure at m               {}", r.fpure_at_m);
    let _ = writeln!(s, "tau class                 {}", r.tau_class);
    let _ = writeln!(s, "reg(S/tau)                {}", opt(r.reg_s_mod_tau));
    let _ = writeln!(s, "ell                       {}", opt(r.ell));
    let _ = writeln!(s, "injective below degree    {}", opt(r.injectivity_bound));
    let _ = writeln!(s, "degree bound              {}", r.cor_bound);
    let _ = writeln!(s, "prime threshold           {}", r.prime_threshold);
    let _ = writeln!(s, "isolated singularity      {}", r.isolated_singularity);
    s
}

fn analyze_ci(ci: &CompleteIntersection) -> Result<(AnalysisReport, TauResult), CliError> {
    analyze(ci).map_err(CliError::from)
}

pub fn cmd_analyze(path: &Path, opts: &Options) -> Result<Output, CliError> {
    let (_, ci) = load(path)?;
    let (report, _) = analyze_ci(&ci)?;
    Ok(Output::ok(if opts.json { to_json(&report) + "\n" } else { render_report(&report) }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub numerator: String,
    pub q: u64,
    pub degree: i64,
    pub frobenius_image_is_zero: bool,
}

pub fn cmd_witness(path: &Path, opts: &Options) -> Result<Output, CliError> {
    let (pf, ci) = load(path)?;
    let tau = frobinj::frobenius::compute_tau(&ci)?;
    match tau.classify() {
        TauClass::EverywhereFPure => {
            return Err(CliError::NotMPrimary(
                "tau = S (everywhere F-pure): there is no Frobenius kernel witness".into(),
            ))
        }
        TauClass::NonFPureLocusPositiveDimensional => {
            return Err(CliError::NotMPrimary(format!(
                "tau = {} is not m-primary: non-F-pure locus is positive dimensional",
                tau.tau
            )))
        }
        TauClass::IsolatedNonFPurePoint => {}
    }
    let alpha = kernel_witness(&ci, &tau, &opts.limits(&pf))?;
    let rec = WitnessRecord {
        numerator: alpha.numerator().to_string(),
        q: alpha.q(),
        degree: alpha.degree(),
        frobenius_image_is_zero: alpha.frobenius()?.is_zero(),
    };
    Ok(Output::ok(if opts.json {
        to_json(&rec) + "\n"
    } else {
        format!(
            "witness [({}) / x^{}] in degree {}\nFrobenius image is zero: {}\n",
            rec.numerator, rec.q, rec.degree, rec.frobenius_image_is_zero
        )
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub rows: Vec<InjectivityResult>,
    /// False when a resource cap stopped the table early.
    pub complete: bool,
    #[serde(rename = "thmA_bound", default, skip_serializing_if = "Option::is_none")]
    pub injectivity_bound: Option<i64>,
    /// Whether injectivity in negative degrees is predicted from an isolated
    /// singularity and `p` at or above the prime threshold.
    pub negative_degrees_predicted: bool,
    /// Degrees where injectivity was predicted but a kernel was found.
    pub violations: Vec<i64>,
    pub consistent: bool,
}

fn predicted_injective(t: i64, report: &AnalysisReport, p: u32) -> bool {
    let below_a = report.injectivity_bound.is_some_and(|b| t < b);
    let below_b = report.isolated_singularity && p as i64 >= report.prime_threshold && t < 0;
    below_a || below_b
}

fn render_verify(v: &VerifyReport) -> String {
    let mut s = String::from("degree  dim  kernel\n");
    for r in &v.rows {
        let _ = writeln!(s, "{:>6}  {:>3}  {:>6}", r.degree, r.dim_source, r.dim_kernel);
    }
    if !v.complete {
        s.push_str("(table stopped early: resource cap)\n");
    }
    let _ = writeln!(
        s,
        "injective below degree {}; negative degrees predicted injective: {}",
        opt(v.injectivity_bound),
        v.negative_degrees_predicted
    );
    let _ = writeln!(s, "consistency: {}", if v.consistent { "PASS" } else { "FAIL" });
    s
}

pub fn cmd_verify(path: &Path, from: Option<i64>, to: Option<i64>, opts: &Options) -> Result<Output, CliError> {
    let (pf, ci) = load(path)?;
    let (from, to) = match (from, to, pf.window) {
        (Some(a), Some(b), _) => (a, b),
        (a, b, Some((wa, wb))) => (a.unwrap_or(wa), b.unwrap_or(wb)),
        _ => return Err(CliError::Parse("no degree window: pass --from and --to or set `window` in the file".into())),
    };
    if to - from + 1 > MAX_WINDOW {
        return Err(CliError::Parse(format!("window [{}, {}] is wider than {} degrees", from, to, MAX_WINDOW)));
    }
    let (report, _) = analyze_ci(&ci)?;
    let limits = opts.limits(&pf);
    let mut rows = Vec::new();
    let mut cap = None;
    for t in from..=to {
        match verify_injectivity(&ci, t, &limits) {
            Ok(r) => rows.push(r),
            Err(e @ (frobinj::Error::ResourceCap(_) | frobinj::Error::ExponentOverflow)) => {
                cap = Some(CliError::from(e));
                break;
            }
            Err(e) => return Err(e.into()),
        }
    }
    let p = ci.characteristic();
    let violations: Vec<i64> =
        rows.iter().filter(|r| !r.injective() && predicted_injective(r.degree, &report, p)).map(|r| r.degree).collect();
    let v = VerifyReport {
        complete: cap.is_none(),
        injectivity_bound: report.injectivity_bound,
        negative_degrees_predicted: report.isolated_singularity && p as i64 >= report.prime_threshold,
        consistent: violations.is_empty(),
        violations,
        rows,
    };
    let stdout = if opts.json { to_json(&v) + "\n" } else { render_verify(&v) };
    Ok(match cap {
        None => Output::ok(stdout),
        Some(e) => Output { stdout, stderr: format!("error: {}\n", e), code: e.exit_code() },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchError {
    pub kind: String,
    pub message: String,
    pub exit_code: i32,
}

/// One line of batch output: either `report` or `error` is present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchRecord {
    pub file: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<AnalysisReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<BatchError>,
}

fn batch_one(path: &Path) -> BatchRecord {
    let file = path.file_name().map_or_else(String::new, |f| f.to_string_lossy().into_owned());
    match load(path).and_then(|(_, ci)| analyze_ci(&ci)) {
        Ok((report, _)) => BatchRecord { file, report: Some(report), error: None },
        Err(e) => BatchRecord {
            file,
            report: None,
            error: Some(BatchError { kind: e.kind().into(), message: e.message().into(), exit_code: e.exit_code() }),
        },
    }
}

pub fn cmd_batch(dir: &Path) -> Result<Output, CliError> {
    let entries = std::fs::read_dir(dir).map_err(|e| CliError::Io(format!("{}: {}", dir.display(), e)))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.is_file() && !p.file_name().is_some_and(|n| n.to_string_lossy().starts_with('.')))
        .collect();
    files.sort();
    let records: Vec<BatchRecord> = files.par_iter().map(|p| batch_one(p)).collect();
    let mut out = String::new();
    for r in &records {
        out.push_str(&to_json(r));
        out.push('\n');
    }
    let failed = records.iter().filter(|r| r.error.is_some()).count();
    let code = if !records.is_empty() && failed == records.len() { exit::IO } else { exit::OK };
    Ok(Output { stdout: out, stderr: String::new(), code })
}
