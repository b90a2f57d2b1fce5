//! Error type shared by all modules of the crate.

/// Errors produced by construction, validation, and the solvers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A sample set with zero clustering draws.
    #[error("no samples")]
    NoSamples,

    /// An input that must be non-empty was empty.
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// Two inputs that must agree on a dimension do not.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A matrix that must be square is not.
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    /// A matrix that must be symmetric is not, beyond the stated tolerance.
    #[error("matrix is asymmetric: max |A - A^T| = {max_abs_diff:.3e} exceeds tolerance {tol:.3e}")]
    Asymmetric { max_abs_diff: f64, tol: f64 },

    /// A kernel matrix fails the positive semi-definiteness check.
    #[error("matrix is not positive semi-definite: smallest eigenvalue {lambda_min:.6e} is below -{tol:.3e}")]
    NotPsd { lambda_min: f64, tol: f64 },

    /// An operation met a cluster with no members.
    #[error("empty cluster {cluster}")]
    EmptyCluster { cluster: usize },

    /// A requested cluster count that cannot be realised on the input.
    #[error("invalid cluster count k={k} for {n} items")]
    InvalidClusterCount { k: usize, n: usize },

    /// A partition whose labels or cluster count are inconsistent.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// Kernel weights off the probability simplex or with bad shape.
    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    /// A binary classification task was given a single-class response.
    #[error("response has a single class; need at least two")]
    SingleClass,

    /// A configuration value outside its documented domain.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A quantity whose defining formula degenerates on this input.
    #[error("{quantity} is undefined: {reason}")]
    Undefined {
        quantity: &'static str,
        reason: String,
    },
}
