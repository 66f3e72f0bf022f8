//! Error-free transformations and the few extended-precision primitives the
//! evaluators need: an accurate `exp(-z^2)` and an accurate fractional part
//! of `x / h`.
//!
//! Products are split with Dekker's algorithm so the crate does not depend on
//! a hardware FMA.

use num_complex::Complex64;

const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1

// Above this magnitude Dekker's split overflows; such arguments are far in
// the overflow/underflow range of exp(-z^2) anyway.
const SPLIT_LIMIT: f64 = 1e150;

#[inline]
pub(crate) fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    let c = SPLITTER * a;
    let hi = c - (c - a);
    (hi, a - hi)
}

#[inline]
pub(crate) fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

/// `x^2` as an unevaluated sum `hi + lo`.
#[inline]
fn square(x: f64) -> (f64, f64) {
    if x.abs() > SPLIT_LIMIT {
        return (x * x, 0.0);
    }
    two_prod(x, x)
}

/// `exp(hi + lo)` for `|lo| <= ulp(hi)`.
#[inline]
fn exp_dd(hi: f64, lo: f64) -> f64 {
    let e = hi.exp();
    if !e.is_finite() {
        return e;
    }
    e + e * lo
}

/// `exp(-x^2)` with the square carried to twice working precision.
#[inline]
pub(crate) fn exp_neg_sq(x: f64) -> f64 {
    let (hi, lo) = square(x);
    exp_dd(-hi, -lo)
}

/// `exp(x^2)`, overflowing to `+inf` for `|x| > 26.64`.
#[inline]
pub(crate) fn exp_sq(x: f64) -> f64 {
    let (hi, lo) = square(x);
    exp_dd(hi, lo)
}

/// The complex Gaussian `exp(-z^2)`.
///
/// `Re(-z^2) = y^2 - x^2` and `Im(-z^2) = -2xy` are formed exactly (up to a
/// final rounding of the low parts) before exponentiation, which keeps the
/// relative error near one ulp even when `|z|^2` is in the hundreds.
pub(crate) fn gaussian(z: Complex64) -> Complex64 {
    let (x, y) = (z.re, z.im);
    if x.abs() > SPLIT_LIMIT || y.abs() > SPLIT_LIMIT {
        return (-z * z).exp();
    }
    let (yy, yy_lo) = two_prod(y, y);
    let (xx, xx_lo) = two_prod(x, x);
    let (re, re_err) = two_sum(yy, -xx);
    let re_lo = re_err + (yy_lo - xx_lo);

    let (xy, xy_lo) = two_prod(x, y);
    let (im, im_lo) = (-2.0 * xy, -2.0 * xy_lo);

    let mag = exp_dd(re, re_lo);
    let (s, c) = im.sin_cos();
    Complex64::new(mag * (c - s * im_lo), mag * (s + c * im_lo))
}

/// Fractional part of `a / h` for `a >= 0`, `h > 0`, accurate to about one
/// ulp of the fraction itself rather than of the quotient.
pub(crate) fn frac_quotient(a: f64, h: f64) -> f64 {
    let q = a / h;
    if !q.is_finite() || q > 1e15 {
        return q - q.floor();
    }
    let (p, p_lo) = two_prod(q, h);
    let q_lo = ((a - p) - p_lo) / h;
    let mut f = (q - q.floor()) + q_lo;
    if f < 0.0 {
        f += 1.0;
    } else if f >= 1.0 {
        f -= 1.0;
    }
    f
}
