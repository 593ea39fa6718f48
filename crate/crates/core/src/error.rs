use std::fmt;

/// Location-annotated failure from the polynomial text parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the parsed text.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    UnexpectedToken(String),
    UnknownVariable(String),
    ExponentOverflow,
    /// Two factors written next to each other without `*`.
    ImplicitMultiplication,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected character '{}' at position {}", c, self.position)
            }
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input at position {}", self.position),
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected '{}' at position {}", t, self.position),
            ParseErrorKind::UnknownVariable(v) => {
                write!(f, "unknown variable '{}' at position {}", v, self.position)
            }
            ParseErrorKind::ExponentOverflow => {
                write!(f, "exponent exceeds 2^31 - 1 at position {}", self.position)
            }
            ParseErrorKind::ImplicitMultiplication => {
                write!(f, "missing '*' before position {} (implicit multiplication is not allowed)", self.position)
            }
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid variable names: {0}")]
    InvalidVariables(String),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableIndex { index: usize, nvars: usize },
    #[error("exponent overflow (limit 2^31 - 1)")]
    ExponentOverflow,
    #[error("{q} is not a power of {p}")]
    NotPowerOfP { q: u64, p: u32 },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,
    #[error("the unit ideal is not allowed here: {0}")]
    UnitIdeal(&'static str),
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("tau is not m-primary")]
    NotMPrimary,
    #[error("invalid complete intersection: {0}")]
    InvalidCompleteIntersection(String),
    #[error("forms are not a regular sequence: {0}")]
    NotRegularSequence(String),
    #[error("numerator does not annihilate the defining ideal: g*f_{form} is not in m^[{q}]")]
    AnnihilationFailure { form: usize, q: u64 },
    #[error("no exponent vector in {{0..p-1}}^c puts f^t g^p into m^[{0}]")]
    NoFeasibleVector(u64),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
