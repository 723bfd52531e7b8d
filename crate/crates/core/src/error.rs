use thiserror::Error;

/// Errors raised by the library. Counterexamples found by the sweep
/// checkers are reported as data and never appear here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid charge parameters: {0}")]
    Params(String),
    #[error("component index {comp} out of range for level {level}")]
    ComponentOutOfRange { comp: usize, level: usize },
    #[error("node ({row},{col},{comp}) is not addable")]
    NotAddable { row: usize, col: usize, comp: usize },
    #[error("node ({row},{col},{comp}) is not removable")]
    NotRemovable { row: usize, col: usize, comp: usize },
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(usize, usize),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("invalid truncation: {0}")]
    Truncation(String),
    #[error("kappa sequences built from different truncation data")]
    MetaMismatch,
    #[error("malformed rational {0:?}")]
    Rational(String),
    #[error("malformed matrix: {0}")]
    Matrix(String),
    #[error("malformed input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
