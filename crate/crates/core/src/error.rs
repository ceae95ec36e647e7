//! Error types shared across the solver.

use thiserror::Error;

/// Errors produced by field operations, solvers, and time stepping.
#[derive(Debug, Error)]
pub enum Error {
    #[error("fields live on mismatched grids ({0})")]
    GridMismatch(String),

    #[error("temperature must be positive, got {0}")]
    NonpositiveTemperature(f64),

    #[error("pressure Poisson solve did not converge: residual {residual:.3e} after {iters} iterations")]
    PoissonNotConverged { residual: f64, iters: usize },

    #[error("Helmholtz solve did not converge: residual {residual:.3e} after {iters} iterations")]
    HelmholtzNotConverged { residual: f64, iters: usize },

    #[error("temperature positivity lost at t={t}: min theta = {min_theta:.6e} (dt too large)")]
    TemperaturePositivityLost { t: f64, min_theta: f64 },

    #[error("director field blowup at t={t}: max|d| = {max_abs_d:.3e} exceeds guard {guard:.3e}")]
    FieldBlowup { t: f64, max_abs_d: f64, guard: f64 },

    #[error("time step {dt:.3e} violates the {kind} stability bound {bound:.3e}")]
    CflViolation { dt: f64, bound: f64, kind: &'static str },

    #[error("config parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },

    #[error("hypothesis violation for `{key}`: {bound}")]
    HypothesisViolation { key: String, bound: String },

    #[error("non-finite value produced in {0}")]
    NonFinite(&'static str),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid checkpoint: {0}")]
    BadCheckpoint(String),

    #[error("{0}")]
    Invalid(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
