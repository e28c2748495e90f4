use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A closed form was asked for outside the range where it is stated.
    #[error("out of hypothesis: {0}")]
    OutOfHypothesis(String),

    /// The operation was called with incompatible arguments.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("coin is not unitary: {0}")]
    NotUnitary(String),

    #[error("invalid exact value {0:?}")]
    Parse(String),

    /// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
    #[error("quadrature did not converge: estimate {estimate} with error {error_estimate}")]
    Convergence { estimate: f64, error_estimate: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
