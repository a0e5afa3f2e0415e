use thiserror::Error;

/// Errors raised by constructors and operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("composition parts must be positive, found 0 at position {position}")]
    ZeroPart { position: usize },

    #[error("parts are not weakly decreasing at position {position}")]
    NotWeaklyDecreasing { position: usize },

    #[error("invalid set partition: {0}")]
    InvalidSetPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("inner shape is not contained in the outer shape at row {row}")]
    NotContained { row: usize },

    #[error("row {row} of the skew diagram is empty")]
    EmptyRow { row: usize },

    #[error("skew diagram has no boxes")]
    EmptyDiagram,

    #[error("composition must be nonempty")]
    EmptyComposition,

    #[error("k = {k} is out of range 1..={rows}")]
    OverlapOutOfRange { k: usize, rows: usize },

    #[error("skew diagram {0} is not connected")]
    Disconnected(String),

    #[error("both labeled diagrams use the same diagram {0}; use equal_same_diagram")]
    SameDiagram(String),

    #[error("skew diagram {0} is not a nonsymmetric ribbon")]
    NotNonsymmetricRibbon(String),

    #[error("n = {n} is out of range {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },

    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
