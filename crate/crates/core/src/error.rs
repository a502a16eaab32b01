//! Error type shared by every module.

use thiserror::Error;

/// Errors raised by parsing, construction and the conversion operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An expression names a variable outside the universe.
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },
    /// An expression is not well formed.
    #[error("syntax error at position {position}: {message}")]
    SyntaxError { message: String, position: usize },
    /// A section or array has the wrong number of components.
    #[error("rank mismatch: expected {expected} components, found {found}")]
    RankMismatch { expected: usize, found: usize },
    /// A lift weight outside {0, -1, -2}.
    #[error("lift weight must be 0, -1 or -2, found {0}")]
    BadAlpha(i32),
    /// Two vector fields live on different charts.
    #[error("vector fields live on different charts")]
    ChartMismatch,
    /// A vector field does not descend to the requested reduction.
    #[error("vector field is not projectable: coefficient at `{variable}` depends on a dropped variable")]
    NotProjectable { variable: String },
    /// A core section has the wrong number of components.
    #[error("expected {expected} core components, found {found}")]
    BadComponentCount { expected: usize, found: usize },
    /// A lift field is not of the polynomial shape of an algebroid lift.
    #[error("lift field has the wrong shape: {0}")]
    ShapeMismatch(String),
    /// A morphism violates the constraints required by the reconstruction.
    #[error("morphism shape violation: {0}")]
    ShapeViolation(String),
    /// A precondition report failed.
    #[error("incompatible input: {0}")]
    IncompatibleInput(String),
    /// Structure data violates a declared symmetry or dimension.
    #[error("invalid data: {0}")]
    InvalidData(String),
}

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
