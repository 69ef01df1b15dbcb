use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed or out-of-range input (non-finite numbers, λ ≤ 0, invalid pose, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// The requested perimeter exceeds the largest perimeter a λ-convex curve can have.
    #[error("L = {length} exceeds cap {cap:.6}")]
    AboveCap { length: f64, cap: f64 },

    /// A composed curve does not return to its starting pose.
    #[error("curve does not close: residual {residual:e} exceeds {tolerance:e}")]
    NotClosed { residual: f64, tolerance: f64 },

    /// Two independent evaluations of the same quantity disagree.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    /// An iterative solver did not converge.
    #[error("solver failed after {iterations} iterations (residual {residual:e})")]
    Solver { iterations: usize, residual: f64 },

    #[error("certification failed: {}", .0.join("; "))]
    Certification(Vec<String>),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}

pub(crate) fn ensure_finite(name: &str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::input(format!("{name} must be finite, got {value}")))
    }
}
