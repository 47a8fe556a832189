//! Crate-wide error type for parameter validation.

use std::fmt;

/// Validation errors raised by library operations.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// The group order is too small for the requested operation.
    OrderTooSmall { n: u64, min: u64 },
    /// A requested sequence length exceeds the longest possible zero-sum
    /// free sequence (`n - 1`).
    LengthOutOfRange { length: u64, max: u64 },
    /// `k` exceeds `floor(n/3)`, outside the structured regime.
    KOutOfRange { k: u64, max: u64 },
    /// An inclusion probability outside `[0, 1]`.
    ProbabilityOutOfRange { p: String },
    /// A tail-bound parameter outside its admissible range.
    LambdaOutOfRange {
        lambda: f64,
        requirement: &'static str,
    },
    /// A distinct-element count outside the admissible `1..=max` range.
    DistinctOutOfRange { d: u64, max: u64 },
    /// A pinned-set size `i` incompatible with the distinct-element count.
    PinnedSizeOutOfRange { i: u64, d: u64 },
    /// Any other invalid parameter or unsupported combination.
    InvalidParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderTooSmall { n, min } => {
                write!(f, "group order {n} is too small (need n >= {min})")
            }
            Error::LengthOutOfRange { length, max } => {
                write!(f, "sequence length {length} out of range (max {max})")
            }
            Error::KOutOfRange { k, max } => {
                write!(
                    f,
                    "k = {k} out of range (need 0 <= k <= floor(n/3) = {max})"
                )
            }
            Error::ProbabilityOutOfRange { p } => {
                write!(f, "probability {p} outside [0, 1]")
            }
            Error::LambdaOutOfRange {
                lambda,
                requirement,
            } => write!(f, "lambda = {lambda} invalid (need {requirement})"),
            Error::DistinctOutOfRange { d, max } => {
                write!(
                    f,
                    "distinct-element count d = {d} out of range (need 1 <= d <= {max})"
                )
            }
            Error::PinnedSizeOutOfRange { i, d } => {
                write!(
                    f,
                    "pinned-set size i = {i} out of range (need 1 <= i <= d = {d})"
                )
            }
            Error::InvalidParameter(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
