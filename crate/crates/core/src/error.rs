use thiserror::Error;

/// Errors raised across the toolkit.
///
/// The variants line up with the CLI exit codes: `Malformed` and `Parse`
/// are input problems, `Domain` covers infeasible parameters, `Capacity`
/// is an enumeration that would be too large.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("line {line}: cannot parse {token:?} as {expected}")]
    Parse {
        line: usize,
        token: String,
        expected: &'static str,
    },

    #[error("{0}")]
    Domain(String),

    #[error("exhaustive search over {n} vertices exceeds the limit of {limit}")]
    Capacity { n: usize, limit: usize },

    #[error("oracle contract violated: {0}")]
    ContractViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
