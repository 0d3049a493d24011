use thiserror::Error;

/// Error type shared by all numerical modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid potential: {0}")]
    InvalidPotential(String),

    #[error("step size underflow at t = {t} (h = {h:.3e}); spectral parameter out of the stable range")]
    StepSizeUnderflow { t: f64, h: f64 },

    #[error("bracketing failure for {kind} index {index}: {detail}")]
    BracketingFailure {
        kind: &'static str,
        index: usize,
        detail: String,
    },

    #[error("interlacing violation: {0}")]
    InterlacingViolation(String),

    #[error("nonpositive spectrum entry at index {index}: {value}")]
    NonPositiveEntry { index: usize, value: f64 },

    #[error("evaluation at a pole near {0}")]
    PoleEvaluation(f64),

    #[error("zero denominator in Theta at z = {0}")]
    ThetaZeroDenominator(num_complex::Complex64),

    #[error("tail model missing: |z| = {z_abs:.3} is comparable to the truncation scale {limit:.3}")]
    TailModelMissing { z_abs: f64, limit: f64 },

    #[error("phase unwrap ambiguity on ({a}, {b}) after maximum refinement")]
    UnwrapAmbiguity { a: f64, b: f64 },

    #[error("zero on contour boundary persists after {retries} nudges")]
    BoundaryZero { retries: usize },

    #[error("cell at ({x0}, {y0})..({x1}, {y1}) not converged: {detail}")]
    CellNotConverged {
        x0: f64,
        y0: f64,
        x1: f64,
        y1: f64,
        detail: String,
    },

    #[error("root refinement did not converge: {0}")]
    RootNotConverged(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("evaluation failure: {0}")]
    EvaluationFailure(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
