//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by construction, arithmetic and file handling.
///
/// Basis indices in error messages are 1-based, matching the witness
/// convention used by [`crate::report::CheckReport`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid rational literal `{0}` (expected `p` or `p/q` with q != 0)")]
    InvalidRational(String),

    #[error("twist is not multiplicative: alpha(e{i}*e{j}) != alpha(e{i})*alpha(e{j})")]
    NotMultiplicative { i: usize, j: usize },

    #[error("map is not an algebra endomorphism: fails at basis pair ({i},{j})")]
    NotEndomorphism { i: usize, j: usize },

    #[error("bracket is not skew-symmetric at basis pair ({i},{j})")]
    NotSkew { i: usize, j: usize },

    #[error("power index must be at least {min}, got {got}")]
    PowerIndex { min: usize, got: usize },

    #[error("structure tensor must be {dim}x{dim} with coordinate vectors of length {dim}")]
    MalformedStructure { dim: usize },

    #[error("twist matrix must be {dim}x{dim}")]
    MalformedTwist { dim: usize },

    #[error("random generation supports dimensions 1..=4, got {0}")]
    GenerationDim(usize),

    #[error(
        "generation budget exhausted for seed {seed}, dim {dim}; try another seed or dimension"
    )]
    GenerationBudget { seed: u64, dim: usize },

    #[error("{path}: {message}")]
    Format { path: String, message: String },

    #[error("{path}: JSON parse error at line {line}, column {column}: {message}")]
    Json {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("failed to read `{path}`")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
