use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("polynomial must have degree at least {0}")]
    DegreeTooLow(usize),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("squarefree part of zero is undefined")]
    ZeroSquarefree,
    #[error("integer {0} exceeds the trial-division limit of 2^64")]
    FactorLimit(String),
    #[error("invalid discriminant {0}: must be negative and congruent to 0 or 1 mod 4")]
    InvalidDiscriminant(i64),
    #[error("unsupported class number {0} (only h = 2 is handled)")]
    UnsupportedClassNumber(u64),
    #[error("invalid Eichler parameters: {0}")]
    InvalidEichler(String),
    #[error("singular curve: {0}")]
    Singular(String),
    #[error("reduction at {0} is not multiplicative")]
    NotMultiplicative(u64),
    #[error("invalid Shimura discriminant/divisor: {0}")]
    InvalidCase(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("degenerate gluing input; use the solve_gluing branch report")]
    DegenerateGluing,
    #[error("invalid genus-2 model: {0}")]
    InvalidModel(String),
    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },
    #[error("database: {0}")]
    Database(String),
    #[error("io error on {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
