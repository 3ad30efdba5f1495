use thiserror::Error;

/// Error type shared by every numerical module. Each variant names the
/// violated contract so a caller (or the CLI) can report which stage of a
/// computation refused to proceed.
#[derive(Debug, Error)]
pub enum CoreError {
    /// Grid construction or grid/state compatibility failed.
    #[error("grid: {0}")]
    Grid(String),

    /// A state or packet violates a resolution or normalization contract.
    #[error("state: {0}")]
    State(String),

    /// Amplitude reached the edge of the computational box.
    #[error("boundary: {0}")]
    Boundary(String),

    /// A stability bound on the time step was violated.
    #[error("stability: {0}")]
    Stability(String),

    /// An input lies outside the physical domain of the operation.
    #[error("domain: {0}")]
    Domain(String),

    /// An eigensolve or quadrature did not converge to its contract.
    #[error("convergence: {0}")]
    Convergence(String),

    /// The computational box is too small for the requested states.
    #[error("box too small: {0}")]
    BoxTooSmall(String),

    /// Sampling density is insufficient for the requested output.
    #[error("undersampled: {0}")]
    Undersampled(String),

    /// Plain invalid argument.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
