//! Complex Faddeeva function and the error-like family (erf, erfc, erfcx,
//! erfi, Dawson) evaluated with the pole-corrected, exponentially convergent
//! trapezoidal rule.
//!
//! Every tuning constant (node spacing, term count, region cutoffs) is derived
//! from a target relative accuracy, see [`tuning::EvalParams`].
//!
//! ```
//! use faddeeva_trapz::{errlike, tuning::EvalParams, Complex64};
//!
//! let params = EvalParams::double_precision();
//! let w = faddeeva_trapz::faddeeva::w(Complex64::new(1.0, 1.0), &params);
//! assert!((w.value.re - 0.30474420525691259).abs() < 1e-15);
//!
//! let erf1 = errlike::erf_real(1.0, &params);
//! assert!((erf1 - 0.8427007929497149).abs() < 1e-15);
//! ```

pub mod cli;
pub mod engine;
pub mod errlike;
mod error;
mod exact;
pub mod faddeeva;
pub mod tuning;

pub use error::Error;
pub use num_complex::Complex64;

/// Binary64 machine epsilon, the unit used for every relative-error report.
pub const DEPS: f64 = 2.220446049250313e-16;

pub type Result<T, E = Error> = std::result::Result<T, E>;
