use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported word size {0}; expected one of 16, 24, 32, 48, 64, 96")]
    UnsupportedWordSize(u32),
    #[error("integer out of range for the field")]
    OutOfRange,
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("unsupported Frobenius power {0}")]
    UnsupportedFrobeniusPower(u32),
    #[error("malformed encoding: {0}")]
    Malformed(&'static str),
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point is not in the prime-order subgroup")]
    NotInSubgroup,
    #[error("empty input")]
    Empty,
    #[error("length mismatch ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("aggregate verification requires distinct messages")]
    DuplicateMessage,
    #[error("unknown operation `{0}`")]
    UnknownOp(String),
}

impl Error {
    /// Caller mistakes (bad arguments), as opposed to invalid data.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedWordSize(_)
                | Error::OutOfRange
                | Error::UnsupportedFrobeniusPower(_)
                | Error::Empty
                | Error::LengthMismatch(..)
                | Error::UnknownOp(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
