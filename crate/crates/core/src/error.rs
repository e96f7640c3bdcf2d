use thiserror::Error;

/// Errors raised anywhere in the pipeline.
///
/// `Internal` is reserved for violated invariants that can only come from a
/// bug in this crate (a failed certificate check, a splice mismatch); the CLI
/// maps it to a distinct exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid lattice link: {0}")]
    InvalidLattice(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("crossing cap exceeded: diagram has {crossings} crossings, cap is {cap}")]
    CapExceeded { crossings: usize, cap: usize },

    #[error("non-generic arrangement: {0}")]
    NonGeneric(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("odd a-span {span} in HOMFLY-PT polynomial")]
    OddSpan { span: i32 },

    #[error("zero polynomial has no a-span")]
    ZeroPolynomial,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("arithmetic overflow in exact geometry")]
    Overflow,

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
