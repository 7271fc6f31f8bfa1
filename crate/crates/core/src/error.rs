use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero has no inverse in GF(4)")]
    ZeroInverse,
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("duplicate index {0}")]
    DuplicateIndex(usize),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("unknown matroid name {0:?}")]
    UnknownName(String),
    #[error("not a matroid: {0}")]
    NotAMatroid(String),
    #[error("{0} is not a circuit-hyperplane")]
    NotCircuitHyperplane(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported scale: {elements} elements exceeds the bound of {bound}")]
    UnsupportedScale { elements: usize, bound: usize },
    #[error("matroid is not GF(4)-representable")]
    NotRepresentable,
    #[error("verification failed: {0}")]
    Verification(String),
}
