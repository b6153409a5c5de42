use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("extension degree {0} is outside 1..=64")]
    InvalidDegree(u32),
    #[error("polynomial {0:#x} is not irreducible of the stated degree")]
    NotIrreducible(u128),
    #[error("element {bits:#x} does not fit in GF(2^{degree})")]
    ElementOutOfRange { bits: u64, degree: u32 },
    #[error("GF(2^{r}) is not a subfield of GF(2^{m})")]
    NotASubfield { r: u32, m: u32 },
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("enumeration of 2^{bits} elements exceeds the budget of 2^{cap}")]
    BudgetExceeded { bits: u32, cap: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("expected an integer, got {0}")]
    NonIntegral(String),
    #[error("expected a rational number, got {0}")]
    NotRational(String),
    #[error("independent evaluations disagree: {0}")]
    FormulaMismatch(String),
    #[error("no candidate period fits the sequence")]
    NoPeriod,
    #[error("charpoly validation failed: {0}")]
    InvalidCharpoly(String),
}

pub type Result<T> = std::result::Result<T, Error>;
