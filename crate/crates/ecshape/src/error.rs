//! Crate-wide error type.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when validating inputs or running numerics.
#[derive(Debug, Clone, PartialEq, Error)]
#[non_exhaustive]
pub enum Error {
    /// An edge connects a node to itself.
    #[error("self-loop at node {0}")]
    SelfLoop(usize),

    /// The same undirected edge appears more than once.
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    /// A node index is outside `0..node_count`.
    #[error("node index {index} out of range for {node_count} nodes")]
    IndexOutOfRange { index: usize, node_count: usize },

    /// A weight vector does not match the number of edges or nodes.
    #[error("{kind} weight vector has length {actual}, expected {expected}")]
    WeightLengthMismatch {
        kind: &'static str,
        expected: usize,
        actual: usize,
    },

    /// A graph weight is NaN or infinite.
    #[error("non-finite graph weight")]
    NonFiniteWeight,

    /// A field value, matrix entry, or coordinate is NaN or infinite.
    #[error("non-finite value in {0}")]
    NonFiniteValue(&'static str),

    /// A buffer length disagrees with the declared shape.
    #[error("{what}: got {actual} values, expected {expected}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        actual: usize,
    },

    /// An operation only supports certain grid ranks.
    #[error("unsupported number of grid dimensions: {0}")]
    UnsupportedDims(usize),

    /// Uniform threshold construction over an empty range.
    #[error("degenerate threshold range: lo must be strictly below hi")]
    DegenerateRange,

    /// A threshold sequence violates its ordering or finiteness rules.
    #[error("invalid threshold sequence: {0}")]
    InvalidThresholds(&'static str),

    /// An edge filtration was requested but the graph has no edge weights.
    #[error("graph has no edge weights")]
    MissingEdgeWeights,

    /// A node filtration was requested but the graph has no node weights.
    #[error("graph has no node weights")]
    MissingNodeWeights,

    /// The filtration direction is not valid for this operation.
    #[error("graph filtrations require sublevel thresholds")]
    DirectionMismatch,

    /// The input exceeds a hard size cap.
    #[error("input size {size} exceeds limit {limit}")]
    TooLarge { size: usize, limit: usize },

    /// Cholesky factorization failed; the matrix is singular or indefinite.
    #[error("matrix is singular or not positive definite")]
    SingularMatrix,

    /// A matrix that must be symmetric is not.
    #[error("matrix is not symmetric")]
    NotSymmetric,

    /// A precision matrix has a non-positive diagonal entry.
    #[error("non-positive diagonal entry at index {0}")]
    NonpositiveDiagonal(usize),

    /// A point cloud has no points.
    #[error("point cloud is empty")]
    EmptyCloud,

    /// A density grid does not cover the point cloud with enough margin.
    #[error("grid too small: it must cover the cloud's bounding box padded by three bandwidths")]
    GridTooSmall,

    /// Two curves compared pointwise have different threshold sequences.
    #[error("threshold sequences do not match")]
    ThresholdMismatch,

    /// A field is constant where variation is required.
    #[error("field is constant")]
    ConstantField,

    /// Classifier training data contains only one class.
    #[error("training labels contain a single class")]
    SingleClass,

    /// Feature dimensions disagree.
    #[error("dimension mismatch: got {actual}, expected {expected}")]
    DimMismatch { expected: usize, actual: usize },

    /// A matrix expected to be symmetric positive definite is not.
    #[error("matrix is not symmetric positive definite")]
    NotSpd,

    /// An explicit Euler step size violates the diffusion stability bound.
    #[error("unstable step: dt = {dt} exceeds dx^2/(4 D) = {bound}")]
    UnstableStep { dt: f64, bound: f64 },

    /// Catch-all for violated preconditions on scalar parameters.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
