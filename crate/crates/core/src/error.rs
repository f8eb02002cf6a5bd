//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter {name}: {reason} (got {value})")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("grid configuration error: {0}")]
    GridConfig(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("degenerate well geometry (no interior barrier) for V0={v0} E_R, Zf={zf}, delta_theta={delta_theta} rad")]
    GeometryDegenerate { v0: f64, zf: f64, delta_theta: f64 },

    #[error("interaction kernel under-resolved: sigma={sigma} < 2*dx={min_sigma} on the evaluation grid")]
    UnderResolvedKernel { sigma: f64, min_sigma: f64 },

    #[error("calibration failed to reach residual {threshold}: best residual {residual} at {best:?}")]
    CalibrationFailed {
        threshold: f64,
        residual: f64,
        best: Vec<f64>,
    },

    #[error("eigensolver did not converge: {0}")]
    SolverNonConvergence(String),

    #[error("state extraction failed: {0}")]
    Extraction(String),

    #[error("time step too large: local Strang error estimate {estimate:.3e} exceeds {limit:.1e} at dt={dt}")]
    StepSize { dt: f64, estimate: f64, limit: f64 },

    #[error("non-finite amplitudes after step {step} (tau={tau}); last good state retained")]
    NumericalBlowup { step: usize, tau: f64 },

    #[error("gate protocol error: {0}")]
    Protocol(String),

    #[error("gate phase undefined: diagonal entry {index} has magnitude {magnitude:.3e} < 1e-6")]
    UndefinedPhase { index: usize, magnitude: f64 },

    #[error("synchronization tilt undefined for non-interacting atoms (U00 = 0)")]
    NonInteractingSynchronization,

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// CLI exit code: 2 for configuration problems, 3 for numerical or
    /// protocol failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameter { .. }
            | Error::GridConfig(_)
            | Error::Config(_)
            | Error::Io(_) => 2,
            _ => 3,
        }
    }
}
