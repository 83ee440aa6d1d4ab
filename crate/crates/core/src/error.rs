use thiserror::Error;

use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("index {index} precedes the series start {start}")]
    IndexBeforeStart { index: i64, start: i64 },

    #[error("summation bounds differ: series start at {left} and {right}")]
    BoundMismatch { left: i64, right: i64 },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("series atoms need a nonzero ratio")]
    ZeroRatio,

    #[error("ratio {0} is not supported here (only ratio 1)")]
    UnsupportedRatio(Rational),

    #[error("override at index {0} is not supported by this operation")]
    UnsupportedOverride(i64),

    #[error("degree {degree} exceeds the configured limit {max}")]
    DegreeLimit { degree: u32, max: u32 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("negative base {0} cannot be evaluated at omega in this mode")]
    NegativeBase(Rational),

    #[error("ratio {0} must be positive")]
    NonPositiveRatio(Rational),

    #[error("value has no standard part (it is infinite)")]
    InfiniteValue,

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unsupported form at byte {offset}: {message}")]
    UnsupportedForm { offset: usize, message: String },

    #[error("bad summation bounds at byte {offset}: {message}")]
    BadBounds { offset: usize, message: String },

    #[error("non-positive base at byte {offset}: {message}")]
    NonPositiveBase { offset: usize, message: String },
}

impl Error {
    /// Byte offset into the parsed text, for errors raised by the parser.
    pub fn offset(&self) -> Option<usize> {
        match self {
            Error::Syntax { offset, .. }
            | Error::UnsupportedForm { offset, .. }
            | Error::BadBounds { offset, .. }
            | Error::NonPositiveBase { offset, .. } => Some(*offset),
            _ => None,
        }
    }
}
