use thiserror::Error;

/// Errors surfaced by model construction and the numerical routines.
///
/// Packet loss, infeasible designs, and diverged episodes are *results*,
/// not errors; they are reported through the corresponding data types.
#[derive(Debug, Error)]
pub enum Error {
    /// A model definition violates its invariants (non-finite entries,
    /// inconsistent dimensions, invalid covariance, non-positive step).
    #[error("invalid model: {0}")]
    InvalidModel(String),

    /// An operation was called with mismatched vector/matrix dimensions.
    #[error("dimension mismatch in {what}: expected {expected}, got {got}")]
    Dimension {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    /// A caller broke an operation precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Queuing model called with arrival rate at or above the service rate.
    #[error("unstable queue: arrival rate {arrival:.6} >= service rate {service:.6} pkts/s")]
    UnstableQueue { arrival: f64, service: f64 },

    /// Riccati recursion failed to converge (unstabilizable pair).
    #[error("controller design failed: {0}")]
    Design(String),

    /// Regression input unusable (too few pairs, values outside [0,1]).
    #[error("regression input invalid: {0}")]
    Regression(String),

    /// Experiment configuration rejected.
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
