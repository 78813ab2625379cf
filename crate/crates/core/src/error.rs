use thiserror::Error;

/// Errors raised by the algebra, the config loaders and the verification drivers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{0}` (expected t0, t1, t2, ...)")]
    UnknownVariable(String),

    #[error("variable t{index} is out of range (allowed: t0..t{bound})")]
    VariableOutOfRange { index: usize, bound: usize },

    #[error("not a valid R[t0] element: offending monomial {0}")]
    NotRt0(String),

    #[error("not an element of R: {0}")]
    NotR(String),

    #[error("not in R_{level}: {reason}")]
    NotInLevel { level: usize, reason: String },

    #[error("degree mismatch: {0}")]
    Degree(String),

    #[error("arity or slot index out of range: {0}")]
    Arity(String),

    #[error("invalid permutation: {0}")]
    Permutation(String),

    #[error("config error on line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("algebra law violated: {0}")]
    AlgebraLaw(String),

    #[error("missing base data: {0}")]
    MissingBase(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("singular system: {0}")]
    Singular(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
