use thiserror::Error;

/// Errors produced by the series, eta-quotient and congruence machinery.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series has no known terms before its truncation bound")]
    ZeroSeries,
    #[error("leading coefficient {coefficient} has no rational {degree}-th root")]
    NotAnNthPower { coefficient: String, degree: i64 },
    #[error("exponent {requested} is at or beyond the truncation bound {bound}")]
    BeyondTruncation { requested: String, bound: String },
    #[error("eta-quotient has non-integral exponents")]
    NonIntegralExponents,
    #[error("scale {delta} does not divide level {level}")]
    ScaleNotDividingLevel { delta: u64, level: u64 },
    #[error("{a} is not coprime to level {level}")]
    NotCoprime { a: i64, level: u64 },
    #[error("need coefficients through index {needed}, table has {available}")]
    InsufficientCoefficients { needed: u64, available: u64 },
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error(
        "series has a term at exponent {0} <= 0; coefficient tables need a cusp form at infinity"
    )]
    NotCuspidal(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
