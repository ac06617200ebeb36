use thiserror::Error;

/// Errors raised by matrix construction, the algebra operations, the text
/// codecs and the cost-model drivers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {n} outside the supported range 1..={max}", max = crate::MAX_DIM)]
    Dimension { n: usize },

    #[error("index ({i}, {j}) out of range for a {n}x{n} matrix")]
    Index { i: usize, j: usize, n: usize },

    #[error("operands have different dimensions ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },

    #[error("operation needs single-word rows (n <= 64), got n = {n}")]
    UnsupportedForDimension { n: usize },

    #[error("row value {value} does not fit in {n} bits")]
    Value { value: u64, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
