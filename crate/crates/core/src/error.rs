//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by state construction and measure evaluation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix data length {got} does not match dimension {dim}x{dim}")]
    BadMatrixShape { dim: usize, got: usize },
    #[error("matrix entry at ({row}, {col}) is not finite")]
    NonFiniteEntry { row: usize, col: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("duplicate subsystem label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown subsystem label `{0}`")]
    UnknownLabel(String),
    #[error("subsystem factor must have dimension >= 1")]
    EmptyFactor,
    #[error("layout dimension {layout} does not match data dimension {data}")]
    LayoutMismatch { layout: usize, data: usize },
    #[error("state norm deviates from 1 by {defect}")]
    NotNormalized { defect: f64 },
    #[error("matrix is not Hermitian (defect {defect})")]
    NotHermitian { defect: f64 },
    #[error("trace deviates from 1 by {defect}")]
    NotUnitTrace { defect: f64 },
    #[error("matrix is not positive semidefinite (minimum eigenvalue {min_eigenvalue})")]
    NotPositive { min_eigenvalue: f64 },
    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("operation requires {expected}, got {got}")]
    WrongLayout { expected: String, got: String },
    #[error("acceleration parameter {value} outside [0, pi/4]")]
    ParamOutOfRange { value: f64 },
    #[error("argument `{name}` must be positive and finite, got {value}")]
    NonPositiveArgument { name: &'static str, value: f64 },
    #[error("scenario must accelerate at least one observer")]
    EmptyScenario,
    #[error("measure evaluated to {value}, below the error floor")]
    NegativeMeasure { value: f64 },
    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
