use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Gamma evaluated at a non-positive integer.
    #[error("gamma pole at z = {re}")]
    GammaPole { re: f64 },

    /// A series failed to meet its tolerance within the term cap.
    #[error("{what}: no convergence within {max_terms} terms")]
    NonConvergence { what: &'static str, max_terms: usize },

    /// Resonant Frobenius case: the exponent-0 series is inconsistent at
    /// index `k` and a logarithmic companion term would be required.
    #[error("log term needed: obstruction {obstruction:.6e} at k = {k}")]
    LogTermNeeded { k: usize, obstruction: f64 },

    /// A Hermite-expansion recurrence coefficient alpha_n vanished, so the
    /// forward solve would divide by zero.
    #[error("recurrence division by zero: alpha_{n} = 0 (K/(2b) is a positive integer <= N)")]
    ZeroAlphaDivision { n: usize },

    /// Adaptive integrator step shrank below the floor, typically next to
    /// the 1/s singularity; enlarge the series patch instead.
    #[error("step size underflow near s = {s:.6e}; enlarge the series patch")]
    StepUnderflow { s: f64 },

    /// An internal two-route consistency check failed.
    #[error("consistency check `{what}` failed: delta = {delta:.6e}")]
    ConsistencyCheck { what: &'static str, delta: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
