use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{family}: parameter {param} = {value} out of bounds ({requirement})")]
    ParameterOutOfBounds {
        family: &'static str,
        param: &'static str,
        value: u64,
        requirement: &'static str,
    },

    #[error("group validation failed: {0}")]
    InvalidGroup(String),

    #[error("group is abelian, its NCCC-graph has no vertices")]
    AbelianGroup,

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("spectrum multiplicities sum to {got}, expected {expected}")]
    MultiplicityMismatch { expected: usize, got: usize },

    #[error("closed form not applicable: {0}")]
    ClosedForm(String),

    #[error("invalid group table: {0}")]
    Table(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
