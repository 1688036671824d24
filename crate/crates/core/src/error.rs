//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by construction, analysis and simulation routines.
#[derive(Debug, Error)]
pub enum Error {
    /// Transfer-function construction rejected the coefficient lists.
    #[error("invalid transfer function: {0}")]
    InvalidTf(String),

    /// Numerator degree exceeds denominator degree.
    #[error("improper transfer function: numerator degree {num_deg} > denominator degree {den_deg}")]
    Improper { num_deg: usize, den_deg: usize },

    /// A coefficient, matrix entry or parameter is NaN or infinite.
    #[error("non-finite value in {0}")]
    NonFinite(String),

    /// Corner-frequency preconditions violated (e.g. `omega_l >= omega_h`).
    #[error("invalid corner frequencies: {0}")]
    InvalidCorner(String),

    /// Frequency-domain evaluation requires a positive frequency.
    #[error("frequency must be positive and finite, got {0}")]
    InvalidFrequency(f64),

    /// The denominator vanishes at `s = j*omega`.
    #[error("pole on the imaginary axis at omega = {omega}")]
    PoleOnAxis { omega: f64 },

    /// Matrix dimensions are inconsistent.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// System interconnection violates a structural constraint.
    #[error("invalid system: {0}")]
    InvalidSystem(String),

    /// Simulation state became non-finite.
    #[error("simulation diverged: first non-finite state at t = {t}")]
    Divergence { t: f64 },

    /// The reset event count exceeded the configured budget.
    #[error("chattering: more than {max_events} reset events by t = {t}")]
    Chattering { max_events: usize, t: f64 },

    /// Steady-state harmonic extraction found the response non-periodic.
    #[error(
        "non-periodic steady state at omega = {omega}: window mismatch {mismatch:.3e} exceeds {tol:.1e}"
    )]
    NonPeriodic { omega: f64, mismatch: f64, tol: f64 },

    /// Loop-shaping target cannot be met by the filter structure.
    #[error(
        "phase margin target {requested_deg:.1} deg unattainable with a single lead section \
         (maximum achievable {max_achievable_deg:.1} deg)"
    )]
    PhaseMarginUnattainable {
        requested_deg: f64,
        max_achievable_deg: f64,
    },

    /// Closed-loop interconnection contains an algebraic loop.
    #[error("algebraic loop: {0}")]
    AlgebraicLoop(String),

    /// Kalman covariance update lost positive definiteness.
    #[error("covariance lost positive definiteness at step {step}")]
    CovarianceNotPd { step: usize },

    /// Configuration value rejected.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// JSON (de)serialisation failure.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for runtime numerical failures (as opposed to validation
    /// failures of inputs and configuration).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Divergence { .. }
                | Error::Chattering { .. }
                | Error::NonPeriodic { .. }
                | Error::PoleOnAxis { .. }
                | Error::CovarianceNotPd { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
