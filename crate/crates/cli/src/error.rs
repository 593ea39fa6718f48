use std::fmt;
use std::path::Path;

use frobinj::Error;

use crate::problem::{LoadError, ProblemError};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const INVALID_CI: i32 = 3;
    pub const RESOURCE_CAP: i32 = 4;
    pub const NOT_M_PRIMARY: i32 = 5;
}

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Parse(String),
    InvalidCi(String),
    ResourceCap(String),
    /// τ is not m-primary; carries a description of the classification.
    NotMPrimary(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Internal(_) => exit::IO,
            CliError::Parse(_) => exit::PARSE,
            CliError::InvalidCi(_) => exit::INVALID_CI,
            CliError::ResourceCap(_) => exit::RESOURCE_CAP,
            CliError::NotMPrimary(_) => exit::NOT_M_PRIMARY,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io(_) => "io",
            CliError::Parse(_) => "parse",
            CliError::InvalidCi(_) => "invalid_complete_intersection",
            CliError::ResourceCap(_) => "resource_cap",
            CliError::NotMPrimary(_) => "tau_not_m_primary",
            CliError::Internal(_) => "internal",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Io(m)
            | CliError::Parse(m)
            | CliError::InvalidCi(m)
            | CliError::ResourceCap(m)
            | CliError::NotMPrimary(m)
            | CliError::Internal(m) => m,
        }
    }

    pub fn load(path: &Path, e: LoadError) -> CliError {
        match e {
            LoadError::Io(e) => CliError::Io(format!("{}: {}", path.display(), e)),
            LoadError::Syntax(ProblemError { line, column, message }) => {
                CliError::Parse(format!("{}:{}:{}: {}", path.display(), line, column, message))
            }
        }
    }

    /// Errors raised while building the complete intersection.
    pub fn validation(path: &Path, e: Error) -> CliError {
        CliError::InvalidCi(format!("{}: {}", path.display(), e))
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceCap(_) | Error::ExponentOverflow => CliError::ResourceCap(e.to_string()),
            Error::NotMPrimary => CliError::NotMPrimary(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.message())
    }
}

impl std::error::Error for CliError {}
