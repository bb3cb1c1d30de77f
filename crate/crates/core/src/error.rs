use thiserror::Error;

/// Errors raised by constructors, builders and enumerators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid part sequence: {0}")]
    InvalidPartSeq(String),

    #[error("not an over-partition: {0}")]
    NotOverPartition(String),

    #[error("invalid colored part: {0}")]
    InvalidColoredPart(String),

    #[error("truncation caps differ: {left} vs {right}")]
    CapMismatch { left: String, right: String },

    #[error("singular expansion: {0}")]
    Singular(String),

    #[error("expansion does not terminate at the given caps: {0}")]
    NonTerminating(String),

    #[error("index set exhausted: {0}")]
    Exhausted(String),

    #[error("enumeration would not terminate: {0}")]
    InfiniteSet(String),

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("parameters outside hypotheses: {0}")]
    InvalidParams(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("corrupted input: {0}")]
    Corrupted(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
