use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("line {0} has zero normal vector")]
    ZeroNormal(usize),

    #[error("line {second} duplicates line {first}")]
    DuplicateLine { first: usize, second: usize },

    #[error("arrangement has no lines")]
    EmptyArrangement,

    #[error("plane {0} does not pass through the origin")]
    NotCentral(usize),

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("unknown arrangement `{0}`")]
    UnknownArrangement(String),

    #[error("omega must be nonzero")]
    ZeroOmega,

    #[error("invalid omega `{0}`")]
    InvalidOmega(String),

    #[error("omega has length {got}, arrangement has {expected} lines")]
    OmegaLength { expected: usize, got: usize },

    #[error("milnor fiber analysis needs an even number of planes, got {0}")]
    OddArrangement(usize),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("boundary maps do not compose to zero")]
    NonZeroSquare,

    #[error("malformed complex: {0}")]
    Malformed(String),

    #[error("integer overflow during elimination")]
    Overflow,

    #[error("face enumeration inconsistent: {0}")]
    FaceCount(String),
}
