//! Problem files: flat `key = value` lines.
//!
//! ```text
//! # plane quartic
//! p = 3
//! vars = x, y, z
//! gens = x^2*y^2 + y^2*z^2 + z^2*x^2
//! window = -3, 2
//! max_q = 729
//! ```
//!
//! `p`, `vars` and `gens` are required; `window` and `max_q` are optional.
//! Blank lines and `#` comments are ignored.

use std::fmt;
use std::path::Path;

use frobinj::{CompleteIntersection, Error, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub p: u64,
    pub vars: Vec<String>,
    pub gens: Vec<String>,
    pub window: Option<(i64, i64)>,
    pub max_q: Option<u64>,
}

/// A syntax or validation error at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ProblemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ProblemError {}

fn perr(line: usize, column: usize, message: impl Into<String>) -> ProblemError {
    ProblemError { line, column, message: message.into() }
}

/// Splits on commas, returning each trimmed piece with its 1-based column.
fn split_list(value: &str, value_col: usize) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for piece in value.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        out.push((piece.trim().to_string(), value_col + start + lead));
        start += piece.len() + 1;
    }
    out
}

fn parse_int<T: std::str::FromStr>(text: &str, line: usize, col: usize, what: &str) -> Result<T, ProblemError> {
    text.parse().map_err(|_| perr(line, col, format!("expected {}, found `{}`", what, text)))
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, ProblemError> {
    let mut p = None;
    let mut vars = None;
    let mut gens = None;
    let mut window = None;
    let mut max_q = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(eq) = content.find('=') else {
            let col = content.len() - content.trim_start().len() + 1;
            return Err(perr(line, col, "expected `key = value`"));
        };
        let key = content[..eq].trim();
        let key_col = content.len() - content.trim_start().len() + 1;
        let value_raw = &content[eq + 1..];
        let value = value_raw.trim();
        let value_col = eq + 2 + (value_raw.len() - value_raw.trim_start().len());
        if value.is_empty() {
            return Err(perr(line, value_col, format!("missing value for `{}`", key)));
        }
        let dup = |set: bool| if set { Err(perr(line, key_col, format!("duplicate key `{}`", key))) } else { Ok(()) };
        match key {
            "p" => {
                dup(p.is_some())?;
                p = Some((parse_int::<u64>(value, line, value_col, "a prime")?, line, value_col));
            }
            "vars" => {
                dup(vars.is_some())?;
                let list = split_list(value, value_col);
                if let Some((_, col)) = list.iter().find(|(v, _)| v.is_empty()) {
                    return Err(perr(line, *col, "empty variable name"));
                }
                vars = Some((list, line));
            }
            "gens" => {
                dup(gens.is_some())?;
                let list = split_list(value, value_col);
                if let Some((_, col)) = list.iter().find(|(g, _)| g.is_empty()) {
                    return Err(perr(line, *col, "empty generator"));
                }
                gens = Some((list, line));
            }
            "window" => {
                dup(window.is_some())?;
                let list = split_list(value, value_col);
                if list.len() != 2 {
                    return Err(perr(line, value_col, "window needs two integers `from, to`"));
                }
                let from = parse_int(&list[0].0, line, list[0].1, "an integer")?;
                let to = parse_int(&list[1].0, line, list[1].1, "an integer")?;
                window = Some((from, to));
            }
            "max_q" => {
                dup(max_q.is_some())?;
                max_q = Some(parse_int(value, line, value_col, "a positive integer")?);
            }
            _ => return Err(perr(line, key_col, format!("unknown key `{}`", key))),
        }
    }
    let missing = |k: &str| perr(last_line + 1, 1, format!("missing key `{}`", k));
    let (p, p_line, p_col) = p.ok_or_else(|| missing("p"))?;
    let (vars, vars_line) = vars.ok_or_else(|| missing("vars"))?;
    let (gens, gens_line) = gens.ok_or_else(|| missing("gens"))?;
    if let Err(e) = Ring::new(p, &vars.iter().map(|(v, _)| v.as_str()).collect::<Vec<_>>()) {
        return Err(match e {
            Error::NotPrime(_) => perr(p_line, p_col, e.to_string()),
            _ => perr(vars_line, vars[0].1, e.to_string()),
        });
    }
    let problem = ProblemFile {
        p,
        vars: vars.into_iter().map(|(v, _)| v).collect(),
        gens: gens.iter().map(|(g, _)| g.clone()).collect(),
        window,
        max_q,
    };
    // polynomial syntax errors carry a byte offset inside the generator
    let ring = problem.ring();
    for (g, col) in &gens {
        if let Err(Error::Parse(pe)) = ring.parse(g) {
            let msg = pe.to_string();
            let msg = msg.rsplit_once(" at position ").map_or(msg.as_str(), |(m, _)| m);
            return Err(perr(gens_line, col + pe.position, msg));
        }
    }
    Ok(problem)
}

impl ProblemFile {
    pub fn ring(&self) -> Ring {
        Ring::new(self.p, &self.vars).expect("validated on parse")
    }

    /// Runs the regular-sequence check.
    pub fn complete_intersection(&self) -> Result<CompleteIntersection, Error> {
        CompleteIntersection::parse(&self.ring(), &self.gens)
    }
}

/// Error loading a problem file from disk.
#[derive(Debug)]
pub enum LoadError {
    Io(std::io::Error),
    Syntax(ProblemError),
}

pub fn load(path: &Path) -> Result<ProblemFile, LoadError> {
    let text = std::fs::read_to_string(path).map_err(LoadError::Io)?;
    parse_problem(&text).map_err(LoadError::Syntax)
}
