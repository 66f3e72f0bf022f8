use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("target accuracy must lie in (0, 1), got {0}")]
    Accuracy(f64),

    #[error("invalid node scheme: {0}")]
    Scheme(String),

    #[error("truncation formula undefined for eps={eps}, h={h}")]
    Truncation { eps: f64, h: f64 },

    #[error("fixed-point iteration did not converge after {0} steps")]
    NoConvergence(usize),

    #[error("pole correction must be finite, got {0}")]
    NonFiniteCorrection(num_complex::Complex64),

    #[error("kernel is not even: K({t}) != K(-{t})")]
    OddKernel { t: f64 },

    #[error("brute-force quadrature needs at least {min} steps, got {got}")]
    TooFewSteps { min: usize, got: usize },

    #[error("{0} has no real-valued specialization")]
    ComplexOnly(&'static str),
}
