use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("quotient is not Artinian")]
    NotArtinian,
    #[error("invalid format: {0}")]
    InvalidFormat(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not a regular sequence: {0}")]
    NotRegular(String),
    #[error("retry budget of {attempts} attempts exhausted: {context}")]
    RetriesExhausted { attempts: usize, context: String },
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
