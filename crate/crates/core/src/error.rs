use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("weight matrix has rank {rank} mod p but {rows} rows; normalize it first")]
    RankDeficient { rank: usize, rows: usize },

    #[error("column {0} is already a pivot column")]
    InvalidColumn(usize),

    #[error("capacity exceeded: {required} items needed, cap is {cap}")]
    CapacityExceeded { required: u128, cap: u128 },

    #[error("exponent arithmetic overflows u32 for p = {p}, n - k = {free}")]
    Overflow { p: u64, free: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("generator sets differ between strategies")]
    Mismatch,

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::DimensionMismatch { .. } | Error::InvalidColumn(_) => 2,
            Error::NonPrimeModulus(_) => 3,
            Error::CapacityExceeded { .. } | Error::Overflow { .. } => 4,
            Error::Mismatch => 5,
            Error::RankDeficient { .. } | Error::Internal(_) | Error::Io(_) => 1,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
