use thiserror::Error;

/// Errors produced while constructing sequences, evaluating functions or
/// parsing input specs. Condition verdicts are *not* errors: a condition
/// failing is a result, not a fault.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite entry at index {index}")]
    NonFinite { index: usize },

    #[error("flag violation: {0}")]
    FlagViolation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("truncation too small: {0}")]
    TruncationTooSmall(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("conjugate domain too small for x = {x}: maximizer at the cap")]
    ConjugateDomain { x: f64 },

    #[error("window too small: {0}")]
    WindowTooSmall(String),

    #[error("rejection sampling budget exceeded after {attempts} attempts")]
    RejectionBudget { attempts: usize },

    #[error("unknown identifier: {0}")]
    UnknownId(String),

    #[error("spec parse error: {0}")]
    SpecParse(String),

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
