//! Command-line front end for `frobinj`: problem files, the `analyze`,
//! `witness`, `verify` and `batch` commands, and their JSON records.

pub mod commands;
pub mod error;
pub mod problem;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use commands::{Options, Output};

#[derive(Debug, Parser)]
#[command(name = "frobinj", version, about = "Frobenius actions on local cohomology of graded complete intersections")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest Frobenius power q to try (default p^6).
    #[arg(long, global = true, value_name = "Q")]
    pub max_q: Option<u64>,
    /// Largest number of columns in a graded-piece linear system (default 20000).
    #[arg(long, global = true, value_name = "N")]
    pub max_cols: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute tau, F-purity and the injectivity bounds.
    Analyze { file: PathBuf },
    /// Construct a nonzero class killed by Frobenius in the sharp degree.
    Witness { file: PathBuf },
    /// Measure the Frobenius kernel on each degree of a window.
    Verify {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        from: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<i64>,
    },
    /// Analyze every file of a directory; one JSON line per file.
    Batch { dir: PathBuf },
}

pub fn run(cli: &Cli) -> Output {
    let opts = Options { json: cli.json, max_q: cli.max_q, max_cols: cli.max_cols };
    let result = match &cli.command {
        Command::Analyze { file } => commands::cmd_analyze(file, &opts),
        Command::Witness { file } => commands::cmd_witness(file, &opts),
        Command::Verify { file, from, to } => commands::cmd_verify(file, *from, *to, &opts),
        Command::Batch { dir } => commands::cmd_batch(dir),
    };
    result.unwrap_or_else(|e| Output::from_error(&e))
}
