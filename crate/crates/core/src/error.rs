use thiserror::Error;

/// Errors raised anywhere in the toolkit.
///
/// Verdict failures (an inequality that does not hold) are never errors; they
/// are reported inside the returned report values. Errors are reserved for bad
/// input, violated preconditions and numerical breakdown.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown identifier `{name}` at offset {offset}")]
    UnknownIdentifier { name: String, offset: usize },

    #[error("domain error: {what} at x = {x}")]
    Domain { what: &'static str, x: f64 },

    #[error("x = {x} lies outside the function domain {domain}")]
    OutOfDomain { x: f64, domain: String },

    #[error("y = {y} lies outside the range [{lo}, {hi}] of the link")]
    Range { y: f64, lo: f64, hi: f64 },

    #[error("derivative singularity: g' = 0 at {at}")]
    DerivativeSingular { at: f64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal mass {off})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("trace is {trace}, expected 1")]
    InvalidTrace { trace: f64 },

    #[error("not positive semi-definite (min eigenvalue {min_eigenvalue})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("matrix file, line {line}: {message}")]
    MatrixFormat { line: usize, message: String },

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
