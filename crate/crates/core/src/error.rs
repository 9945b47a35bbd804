use core::fmt;

/// Errors reported by the optimizers and benchmark problems.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An optimizer or search-space parameter is out of range.
    Config(&'static str),
    /// Two vectors that must agree in length do not.
    DimensionMismatch { expected: usize, found: usize },
    /// A coordinate handed to an objective is NaN.
    NotANumber { index: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Config(msg) => write!(f, "invalid configuration: {msg}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotANumber { index } => write!(f, "coordinate {index} is NaN"),
        }
    }
}

impl core::error::Error for Error {}
