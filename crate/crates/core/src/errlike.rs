//! Error-like functions from the Faddeeva function.
//!
//! Complex arguments go through the sign-dispatched identities
//!
//! ```text
//! erfcx(z) = w(iz)
//! erfc(z)  = e^{-z²} w(iz)            Re z ≥ 0     2 − e^{-z²} w(−iz)      Re z < 0
//! erf(z)   = 1 − e^{-z²} w(iz)        Re z ≥ 0     e^{-z²} w(−iz) − 1      Re z < 0
//! erfi(z)  = −i + i e^{z²} w(−z)      Im z ≤ 0     −i e^{z²} w(z) + i      Im z > 0
//! D(z)     = i√π/2 (e^{-z²} − w(z))   Re z ≥ 0     i√π/2 (w(−z) − e^{-z²}) Re z < 0
//! ```
//!
//! Real arguments use only the real-valued `erfcx` and `Im w` evaluators.

use std::f64::consts::{FRAC_2_SQRT_PI, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::exact::{exp_neg_sq, exp_sq, gaussian};
use crate::faddeeva::{self, erfcx_real, exp_divided, im_w_real, lattice_tail, tail_converges, w_minus_gaussian};
use crate::tuning::EvalParams;
use crate::{Error, Result};

const HALF_SQRT_PI: f64 = 0.886_226_925_452_758;
const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

// Inside this modulus the odd functions are formed from `w(z) − e^{-z²}`
// directly instead of as a difference of two nearly equal terms.
const COMPLEX_LATTICE: f64 = 0.75;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionKind {
    Erf,
    Erfc,
    Erfcx,
    Erfi,
    Dawson,
    /// The Faddeeva function itself.
    W,
    /// `Im w(x)` on the real axis; `(2/√π) D(z)` off it.
    ImW,
}

impl FunctionKind {
    pub const ALL: [FunctionKind; 7] = [
        FunctionKind::Erf,
        FunctionKind::Erfc,
        FunctionKind::Erfcx,
        FunctionKind::Erfi,
        FunctionKind::Dawson,
        FunctionKind::W,
        FunctionKind::ImW,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionKind::Erf => "erf",
            FunctionKind::Erfc => "erfc",
            FunctionKind::Erfcx => "erfcx",
            FunctionKind::Erfi => "erfi",
            FunctionKind::Dawson => "dawson",
            FunctionKind::W => "w",
            FunctionKind::ImW => "imw",
        }
    }

    /// Odd functions of a real argument, the ones with a zero at the origin.
    pub fn is_odd(self) -> bool {
        matches!(self, FunctionKind::Erf | FunctionKind::Erfi | FunctionKind::Dawson | FunctionKind::ImW)
    }
}

impl fmt::Display for FunctionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown function `{s}` (expected w, imw, erf, erfc, erfcx, erfi or dawson)"))
    }
}

#[inline]
fn w(z: Complex64, params: &EvalParams) -> Complex64 {
    faddeeva::w(z, params).value
}

/// Evaluates `kind` at a complex argument.
///
/// On the real axis every kind except `W` is real-valued and goes through
/// [`evaluate_real`], so the two entry points agree there.
pub fn evaluate(kind: FunctionKind, z: Complex64, params: &EvalParams) -> Complex64 {
    if z.im == 0.0 && kind != FunctionKind::W && z.re.is_finite() {
        if let Ok(v) = evaluate_real(kind, z.re, params) {
            return Complex64::new(v, 0.0);
        }
    }
    match kind {
        FunctionKind::W => w(z, params),
        FunctionKind::Erfcx => w(I * z, params),
        FunctionKind::Erfc => {
            if z.re >= 0.0 {
                gaussian(z) * w(I * z, params)
            } else {
                2.0 - gaussian(z) * w(-I * z, params)
            }
        }
        FunctionKind::Erf if near_origin(z, params) => -gaussian(z) * w_minus_gaussian(I * z, params),
        FunctionKind::Erf => {
            if z.re >= 0.0 {
                1.0 - gaussian(z) * w(I * z, params)
            } else {
                gaussian(z) * w(-I * z, params) - 1.0
            }
        }
        FunctionKind::Erfi if near_origin(z, params) => -I * gaussian(I * z) * w_minus_gaussian(z, params),
        FunctionKind::Erfi => {
            // e^{z²} = exp(-(iz)²)
            let g = gaussian(I * z);
            if z.im <= 0.0 {
                -I + I * g * w(-z, params)
            } else {
                -I * g * w(z, params) + I
            }
        }
        FunctionKind::Dawson => dawson(z, params),
        FunctionKind::ImW => FRAC_2_SQRT_PI * dawson(z, params),
    }
}

#[inline]
fn near_origin(z: Complex64, params: &EvalParams) -> bool {
    let r = z.norm();
    r < COMPLEX_LATTICE && tail_converges(r, &params.staggered) && tail_converges(r, &params.unstaggered)
}

fn dawson(z: Complex64, params: &EvalParams) -> Complex64 {
    if near_origin(z, params) {
        -I * HALF_SQRT_PI * w_minus_gaussian(z, params)
    } else if z.re >= 0.0 {
        I * HALF_SQRT_PI * (gaussian(z) - w(z, params))
    } else {
        I * HALF_SQRT_PI * (w(-z, params) - gaussian(z))
    }
}

/// Evaluates `kind` at a real argument using real arithmetic only.
///
/// With the Maclaurin toggle, `erf`, `erfi`, `Dawson` and `Im w` switch to
/// their power series for `|x| ≤ maclaurin_radius`. `W` has no real
/// specialization and is rejected.
pub fn evaluate_real(kind: FunctionKind, x: f64, params: &EvalParams) -> Result<f64> {
    Ok(match kind {
        FunctionKind::W => return Err(Error::ComplexOnly("w")),
        FunctionKind::Erfcx => erfcx_real(x, params),
        FunctionKind::Erfc => erfc_real(x, params),
        FunctionKind::Erf => erf_real(x, params),
        FunctionKind::Erfi => erfi_real(x, params),
        FunctionKind::Dawson => dawson_real(x, params),
        FunctionKind::ImW => im_w_real(x, params),
    })
}

#[inline]
fn use_series(x: f64, params: &EvalParams) -> bool {
    params.use_maclaurin() && x.abs() <= params.maclaurin_radius()
}

pub fn erfc_real(x: f64, params: &EvalParams) -> f64 {
    if x >= 0.0 {
        exp_neg_sq(x) * erfcx_real(x, params)
    } else {
        2.0 - exp_neg_sq(x) * erfcx_real(-x, params)
    }
}

/// Odd by construction: negative arguments reflect.
pub fn erf_real(x: f64, params: &EvalParams) -> f64 {
    if x.is_nan() {
        return x;
    }
    if x < 0.0 {
        return -erf_real(-x, params);
    }
    if use_series(x, params) {
        return FRAC_2_SQRT_PI * erf_series(x, params.maclaurin_terms(), -1.0);
    }
    if x > 0.0 && x < ERF_LATTICE && x < params.strip_height() && tail_converges(x, &params.staggered) {
        return erf_lattice(x, params);
    }
    1.0 - exp_neg_sq(x) * erfcx_real(x, params)
}

// Below this `1 − e^{-x²} erfcx(x)` cancels.
const ERF_LATTICE: f64 = 0.6;

/// `1 − e^{-x²} erfcx(x)` with the staggered trapezoid for `erfcx` written out,
/// `1 − 2/(1 + e^{2u})` as `tanh u`, and `tanh u` expanded over the node
/// lattice, `tanh(πx/h) = (2hx/π) Σ_k 1/(x² + t_k²)`:
///
/// ```text
/// erf(x) = (2hx/π) [Σ_n (1 − e^{-x² − t_n²})/(x² + t_n²) + Σ_{k>N} 1/(x² + t_k²)]
/// ```
///
/// Every term is positive.
fn erf_lattice(x: f64, params: &EvalParams) -> f64 {
    let table = &params.staggered;
    let x2 = x * x;
    let mut sum = 0.0;
    for &t in table.scheme.nodes() {
        sum += exp_divided(x2 + t * t);
    }
    (2.0 * params.h() / PI) * x * (sum + lattice_tail(table, -x2))
}

/// `erfi(x) = e^{x²} Im w(x)`; overflows to `±inf` for `|x| ≳ 26.6`.
pub fn erfi_real(x: f64, params: &EvalParams) -> f64 {
    if use_series(x, params) {
        return FRAC_2_SQRT_PI * erf_series(x, params.maclaurin_terms(), 1.0);
    }
    let s = im_w_real(x, params);
    if s == 0.0 {
        return s;
    }
    exp_sq(x) * s
}

pub fn dawson_real(x: f64, params: &EvalParams) -> f64 {
    if use_series(x, params) {
        return faddeeva::dawson_series(x, params.maclaurin_terms());
    }
    HALF_SQRT_PI * im_w_real(x, params)
}

/// `Σ sign^n x^{2n+1} / (n! (2n+1))`: erf series for `sign = −1`, erfi for
/// `sign = 1` (both without the `2/√π` factor).
fn erf_series(x: f64, terms: usize, sign: f64) -> f64 {
    let x2 = sign * x * x;
    // Horner on the term ratios, coefficient c_n = 1/(n!(2n+1)).
    let mut acc = 0.0;
    for n in (1..terms).rev() {
        let nf = n as f64;
        let ratio = (2.0 * nf - 1.0) / (nf * (2.0 * nf + 1.0));
        acc = ratio * x2 * (1.0 + acc);
    }
    x * (1.0 + acc)
}

macro_rules! complex_wrappers {
    ($($name:ident => $kind:ident),* $(,)?) => {
        $(
            #[doc = concat!("`", stringify!($kind), "` at a complex argument.")]
            pub fn $name(z: Complex64, params: &EvalParams) -> Complex64 {
                evaluate(FunctionKind::$kind, z, params)
            }
        )*
    };
}

complex_wrappers! {
    erf => Erf,
    erfc => Erfc,
    erfcx => Erfcx,
    erfi => Erfi,
    dawson_complex => Dawson,
}
