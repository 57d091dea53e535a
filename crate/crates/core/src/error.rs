use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid seed: {condition}")]
    InvalidSeed { condition: String },

    #[error("product y_{{{index}-1}}·S·y_{{{index}-2}} is not symmetric")]
    NonSymmetricProduct { index: usize },

    #[error("term {index} is singular (zero determinant)")]
    SingularTerm { index: usize },

    #[error("zero vector has no projective class")]
    ZeroVector,

    #[error("enclosure contains zero; cannot divide")]
    DivisionByZero,

    #[error("radius {radius} too large: {context}")]
    RadiusTooLarge { radius: String, context: String },

    #[error("precision cap of {cap_bits} bits reached: {context}")]
    PrecisionCap { cap_bits: u64, context: String },

    #[error("sequence too short: {0}; extend the sequence")]
    InsufficientTerms(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("inconsistent matrix recovery between terms {first} and {second}")]
    InconsistentRecovery { first: usize, second: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
