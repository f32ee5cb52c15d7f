use thiserror::Error;

/// Errors raised by the scalarization library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("halfspace normal must be nonzero")]
    ZeroNormal,

    #[error("k must be nonzero")]
    ZeroDirection,

    #[error("direction k is not in the recession cone of H")]
    DirectionNotRecession,

    #[error("unsupported representation: {0}")]
    Unsupported(String),

    #[error("degenerate generator set: {0}")]
    DegenerateGenerators(String),

    #[error("generator cone is not pointed")]
    NonPointedCone,

    #[error("unknown builtin name '{0}'")]
    UnknownBuiltin(String),

    #[error("unknown rule id '{0}'")]
    UnknownRule(String),

    #[error("empty set: {0}")]
    Empty(String),

    #[error("membership along t is not monotone: feasible at t={feasible_t}, infeasible at t={infeasible_t}")]
    NonMonotone { feasible_t: f64, infeasible_t: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("k is not normalizable: coordinate sum is zero")]
    NotNormalizable,
}

pub type Result<T> = std::result::Result<T, Error>;
