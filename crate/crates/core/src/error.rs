use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two exponent vectors (or a vector and an ideal) disagree on `N`.
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// The ideal lacks a pure power of some variable, so `R/I` is infinite.
    NotArtinian {
        missing_var: usize,
    },
    /// A cell set is not closed under taking divisors.
    InvalidStaircase,
    /// Ideal text could not be parsed.
    Syntax {
        pos: usize,
        msg: String,
    },
    UnknownVariable(String),
    /// Only three-variable ideals have a grid region picture.
    UnsupportedDimension {
        nvars: usize,
    },
    /// The strongly stable convention needs `N >= 1` and `l >= 1`.
    InvalidArgument(String),
    /// A size cap was hit; carries the amount of work done before stopping.
    ResourceCap {
        completed: usize,
        limit: usize,
    },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected {expected} variables, found {found}")
            }
            Error::NotArtinian { missing_var } => {
                write!(f, "ideal has infinite colength: no pure power of x{}", missing_var + 1)
            }
            Error::InvalidStaircase => f.write_str("cell set is not divisor-closed"),
            Error::Syntax { pos, msg } => write!(f, "syntax error at byte {pos}: {msg}"),
            Error::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            Error::UnsupportedDimension { nvars } => {
                write!(f, "operation requires 3 variables, got {nvars}")
            }
            Error::InvalidArgument(msg) => f.write_str(msg),
            Error::ResourceCap { completed, limit } => {
                write!(f, "resource cap of {limit} exceeded after {completed} items")
            }
        }
    }
}

impl core::error::Error for Error {}
