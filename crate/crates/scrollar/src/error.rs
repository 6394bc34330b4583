use thiserror::Error;

/// Errors surfaced by the library. Every variant is a caller-visible
/// precondition or verification outcome; internal invariants panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient domains differ: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("invalid prime modulus {modulus}: {reason}")]
    InvalidModulus { modulus: u64, reason: String },

    #[error("degree {got} outside supported range {min}..={max}")]
    DegreeOutOfRange { got: usize, min: usize, max: usize },

    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("polyhedron is unbounded")]
    Unbounded,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("closure violation at (i,j,k)=({i},{j},{k}): valuation deficit {deficit}")]
    Closure {
        i: usize,
        j: usize,
        k: usize,
        deficit: i64,
    },

    #[error("no acceptable draw after {attempts} attempts (seed {seed})")]
    RetryExhausted { attempts: u32, seed: u64 },

    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
