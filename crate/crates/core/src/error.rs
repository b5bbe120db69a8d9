use thiserror::Error;

/// Errors raised by the library. Identity-check failures are not errors; they
/// are reported as data by [`crate::verify`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} index {index} is out of range {min}..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: i64,
        min: i64,
        max: i64,
    },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("graph order {n} exceeds the enumeration cap of {cap}")]
    Capacity { n: u32, cap: u32 },

    #[error("mask has length {found}, expected {expected}")]
    LengthMismatch { expected: u32, found: u32 },

    #[error("sequences use different parameters (h = {left} vs h = {right})")]
    ParameterMismatch { left: u32, right: u32 },

    #[error("invalid mask: {0}")]
    InvalidMask(String),
}

pub type Result<T> = std::result::Result<T, Error>;
