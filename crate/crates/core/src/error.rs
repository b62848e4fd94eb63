use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// The Gram matrix of a left (or right) integral is singular.
    #[error("integral is not faithful: singular pairing matrix")]
    Faithfulness,

    #[error("operands belong to different quantum groups ({left} vs {right})")]
    OwnerMismatch { left: String, right: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("mismatched primes {0} and {1}")]
    PrimeMismatch(u64, u64),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("digit {digit} out of range for prime {prime}")]
    DigitOutOfRange { digit: u64, prime: u64 },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("structure error: {0}")]
    Structure(String),

    #[error("invalid exchange data: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn syntax(position: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            position,
            message: message.into(),
        }
    }
}
