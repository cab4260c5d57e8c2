use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("part bound k must be at least 1")]
    ZeroPartBound,

    #[error("n must be nonnegative, got {0}")]
    NegativeN(i64),

    #[error("part size j={j} is outside 1..={k}")]
    PartOutOfRange { j: i64, k: usize },

    #[error("malformed rhythm pattern: {0}")]
    MalformedPattern(String),

    #[error("malformed composition: {0}")]
    MalformedComposition(String),

    #[error("enumeration refused: F_n = {count} exceeds the oracle cap of {cap}")]
    OracleCapExceeded { cap: u64, count: BigInt },

    #[error("series has nonzero constant term; 1 - s is not invertible")]
    NonzeroConstantTerm,

    #[error("precision must be at least 53 bits, got {0}")]
    PrecisionTooLow(usize),

    #[error("all-roots iteration did not converge after {0} iterations")]
    NoConvergence(usize),

    #[error("root structure check failed: {0}")]
    RootStructure(String),

    #[error("decimals must be at least 1, got {0}")]
    InvalidDecimals(u32),

    #[error("csv: {0}")]
    Csv(String),

    #[error("fit window [{lo}, {hi}] must span at least 8 indices")]
    FitWindow { lo: usize, hi: usize },
}
