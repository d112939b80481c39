//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by graph construction, exact algebra, and search routines.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("invalid composition vector: {0}")]
    InvalidComposition(String),

    #[error("composition length {got} does not match base order {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("unknown reduced graph id `{0}`")]
    UnknownGraphId(String),

    #[error("invalid graph6 input: {0}")]
    Graph6(String),

    #[error("vertex index {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },

    #[error("edge ({u}, {v}) is not present")]
    EdgeAbsent { u: usize, v: usize },

    #[error("edge rotation precondition violated: {0}")]
    RotationPrecondition(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("power iteration failed to converge after {iterations} iterations (residual {residual:.3e})")]
    ConvergenceFailure { iterations: u64, residual: f64 },

    #[error("vector is not unit-norm (|x|_2 = {norm})")]
    NonUnitVector { norm: f64 },

    #[error("partition is not equitable (cells {cell_i} -> {cell_j} have non-constant row sums)")]
    NotEquitable { cell_i: usize, cell_j: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("polynomial has no real root")]
    NoRealRoot,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("order {n} exceeds the supported bound {max} for this operation")]
    OrderTooLarge { n: usize, max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("bundled reference data is corrupt: {0}")]
    GoldenData(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
