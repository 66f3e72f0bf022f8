//! The Faddeeva function `w(z) = exp(-z²) erfc(-iz)` over the whole complex
//! plane.
//!
//! In the closed upper half-plane `w` is the pole-corrected trapezoidal sum
//!
//! ```text
//! w(z) ≈ ih/(πz) + (2ihz/π) Σ e^{-n²h²}/(z² − n²h²)             + P e^{-z²}/(1 − e^{-2πiz/h})
//! w(z) ≈          (2ihz/π) Σ e^{-(n-½)²h²}/(z² − (n-½)²h²)       + P e^{-z²}/(1 + e^{-2πiz/h})
//! ```
//!
//! with `P = 2, 1, 0` below, on, above `Im z = π/h`. The first (unstaggered)
//! line is used when `frac(|Re z|/h) ∈ [0.25, 0.75]`, which keeps the sum
//! denominators away from zero and `|1 ∓ e^{-2πiz/h}| ≥ √2` on the real axis.
//! The lower half-plane follows from `w(z) = 2e^{-z²} − w(−z)`.

use std::f64::consts::{FRAC_2_SQRT_PI, PI};
use std::fmt;

use num_complex::Complex64;

use crate::engine::{trap_quadrature, PoleCorrection};
use crate::exact::{exp_neg_sq, exp_sq, frac_quotient, gaussian};
use crate::tuning::{EvalParams, NodeTable};

const SQRT_PI: f64 = 1.772_453_850_905_516;
const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3;
const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

// Beyond this modulus the one-term asymptotic value is exact to working
// precision (the next term is 1/(2|z|²) < 5e-17 relative).
const HUGE_ARGUMENT: f64 = 1e8;

/// Evaluation region of a complex argument.
///
/// `A`/`B` partition the open upper half-plane by whether the pole term is
/// needed; `C`/`D`/`E` partition the open lower half-plane by the size of
/// `Re(−z²) = Im(z)² − Re(z)²` relative to `±g`. The axes get their own
/// real-valued fast paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    A,
    B,
    C,
    D,
    E,
    RealAxis,
    ImagAxis,
}

impl Region {
    pub const ALL: [Region; 7] = [
        Region::A,
        Region::B,
        Region::C,
        Region::D,
        Region::E,
        Region::RealAxis,
        Region::ImagAxis,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Region::A => "A",
            Region::B => "B",
            Region::C => "C",
            Region::D => "D",
            Region::E => "E",
            Region::RealAxis => "REAL_AXIS",
            Region::ImagAxis => "IMAG_AXIS",
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Value of `w` with the region it was computed in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WResult {
    pub value: Complex64,
    pub region: Region,
    /// `exp(-z²)` (or `exp(x²)` on the imaginary axis) exceeded binary64.
    pub overflowed: bool,
}

/// `Re(−z²)` in the factored form `(y − x)(y + x)`.
#[inline]
fn neg_sq_re(z: Complex64) -> f64 {
    (z.im - z.re) * (z.im + z.re)
}

pub fn classify_region(z: Complex64, params: &EvalParams) -> Region {
    if z.re == 0.0 {
        Region::ImagAxis
    } else if z.im == 0.0 {
        Region::RealAxis
    } else if z.im > 0.0 {
        if z.im <= params.strip_height() && z.re.abs() <= params.re_cut() {
            Region::A
        } else {
            Region::B
        }
    } else {
        let a = neg_sq_re(z);
        let g = params.g_cut();
        if a < -g {
            Region::D
        } else if a > g {
            Region::E
        } else {
            Region::C
        }
    }
}

/// Which of the two trapezoidal formulas serves `|Re z| = x`, with the
/// fractional part of `x/h` it was chosen from.
#[inline]
fn branch(x: f64, h: f64) -> (bool, f64) {
    let f = frac_quotient(x, h);
    ((0.25..=0.75).contains(&f), f)
}

/// Stagger-rule diagnostics for an argument: the chosen branch, the distance
/// from `|Re z|` to the nearest node of that branch, and `|1 ∓ e^{-2πiz/h}|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchInfo {
    pub unstaggered: bool,
    pub node_gap: f64,
    pub pole_denominator: f64,
}

pub fn branch_info(z: Complex64, params: &EvalParams) -> BranchInfo {
    let h = params.h();
    let x = z.re.abs();
    let (unstaggered, _) = branch(x, h);
    let table = if unstaggered { &params.unstaggered } else { &params.staggered };
    let mut gap = table.scheme.nodes().iter().map(|t| (x - t).abs()).fold(f64::INFINITY, f64::min);
    if unstaggered {
        gap = gap.min(x);
    }
    let e = (-2.0 * PI * I * z / h).exp();
    let sign = if unstaggered { -1.0 } else { 1.0 };
    BranchInfo { unstaggered, node_gap: gap, pole_denominator: (1.0 + sign * e).norm() }
}

/// `P e^{-z²} / (1 ∓ e^{-2πiz/h})`, rewritten with `v = e^{2πiz/h}` (`|v| ≤ 1`
/// for `Im z ≥ 0`) as `∓P e^{-z²} v / (1 ∓ v)`. `frac` is the fractional part
/// of `|Re z|/h`, used to form the phase of `v` without losing the low bits.
fn pole_term(z: Complex64, frac: f64, p: f64, unstaggered: bool, h: f64) -> Complex64 {
    let mut f = if frac > 0.5 { frac - 1.0 } else { frac };
    if z.re < 0.0 {
        f = -f;
    }
    let (s, c) = (2.0 * PI * f).sin_cos();
    let v = Complex64::new(c, s) * (-2.0 * PI * z.im / h).exp();
    let g = gaussian(z) * p;
    if unstaggered {
        -g * v / (1.0 - v)
    } else {
        g * v / (1.0 + v)
    }
}

/// The integrand factor of `w(z) = ∫ K(t) e^{-t²} dt`, folded to be even in `t`.
#[inline]
pub fn faddeeva_kernel(z: Complex64) -> impl Fn(Complex64) -> Complex64 {
    move |t: Complex64| I * z / (PI * ((z - t) * (z + t)))
}

/// Residues of [`faddeeva_kernel`] at `t = ±z` for `Im z ≥ 0`, in closed form:
/// `P = 2` inside the strip, `1` on its edge, `0` above it, and dropped when
/// `|Re z| > re_cut` where the term is below `eps` relative to `w`.
pub fn pole_correction(z: Complex64, params: &EvalParams) -> PoleCorrection {
    let h = params.h();
    let (unstaggered, frac) = branch(z.re.abs(), h);
    let strip = params.strip_height();
    let p = if z.im < strip {
        2.0
    } else if z.im == strip {
        1.0
    } else {
        0.0
    };
    let negligible = z.re.abs() > params.re_cut() && z.im < strip;
    if p == 0.0 || negligible {
        return PoleCorrection::NONE;
    }
    PoleCorrection::new(pole_term(z, frac, p, unstaggered, h)).unwrap_or(PoleCorrection::NONE)
}

/// Trapezoidal evaluation for `Im z ≥ 0`: the engine applied to
/// [`faddeeva_kernel`] on the node scheme picked by the stagger rule, plus
/// [`pole_correction`].
pub fn w_upper(z: Complex64, params: &EvalParams) -> Complex64 {
    let m2 = z.norm_sqr();
    let huge = m2 > HUGE_ARGUMENT * HUGE_ARGUMENT;
    if huge || (params.use_asymptotic() && m2 > params.asym_radius() * params.asym_radius()) {
        let terms = if huge { 1 } else { params.asym_terms() };
        return w_asymptotic(z, terms);
    }
    let (unstaggered, _) = branch(z.re.abs(), params.h());
    let table = if unstaggered { &params.unstaggered } else { &params.staggered };
    trap_quadrature(&faddeeva_kernel(z), &table.scheme, &pole_correction(z, params))
}

/// `w(z)` anywhere in the complex plane.
///
/// Lower half-plane, per region: C uses `2e^{-z²} − w(−z)`, D drops the
/// Gaussian (`−w(−z)`), E keeps only the Gaussian (`2e^{-z²}`). NaN or
/// infinite arguments give NaN (reported in region B).
pub fn w(z: Complex64, params: &EvalParams) -> WResult {
    if !z.re.is_finite() || !z.im.is_finite() {
        return WResult {
            value: Complex64::new(f64::NAN, f64::NAN),
            region: Region::B,
            overflowed: false,
        };
    }
    let region = classify_region(z, params);
    let (value, overflowed) = match region {
        Region::ImagAxis => {
            let v = erfcx_real(z.im, params);
            (Complex64::new(v, 0.0), v.is_infinite())
        }
        Region::RealAxis => (Complex64::new(exp_neg_sq(z.re), im_w_real(z.re, params)), false),
        Region::A | Region::B => (w_upper(z, params), false),
        Region::D => (-w_upper(-z, params), false),
        Region::C => {
            let g = gaussian(z);
            (2.0 * g - w_upper(-z, params), !g.is_finite())
        }
        Region::E => {
            let g = gaussian(z);
            (2.0 * g, !g.is_finite())
        }
    };
    WResult { value, region, overflowed }
}

/// Shorthand for `w(z, params).value`.
pub fn faddeeva(z: Complex64, params: &EvalParams) -> Complex64 {
    w(z, params).value
}

/// `erfcx(x) = w(ix)` for real `x`, in real arithmetic.
///
/// For `x ≥ 0` only the staggered branch occurs (`Re z = 0`), its sum
/// denominators `−x² − t_n²` are real, and the pole term is
/// `P e^{x²}/(1 + e^{2πx/h})`. Negative `x` reflects through
/// `erfcx(x) = 2e^{x²} − erfcx(−x)`, overflowing below about −26.6.
pub fn erfcx_real(x: f64, params: &EvalParams) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x < 0.0 {
        return 2.0 * exp_sq(x) - erfcx_real(-x, params);
    }
    if x > HUGE_ARGUMENT || (params.use_asymptotic() && x > params.asym_radius()) {
        let terms = if x > HUGE_ARGUMENT { 1 } else { params.asym_terms() };
        return asymptotic_real(x, terms, -1.0);
    }
    let h = params.h();
    let x2 = x * x;
    let table = &params.staggered;
    let mut sum = 0.0;
    for (&t, &c) in table.scheme.nodes().iter().zip(table.scheme.weights()) {
        sum += c / (x2 + t * t);
    }
    let mut v = (2.0 * h / PI) * x * sum;

    let strip = params.strip_height();
    if x <= strip {
        let p = if x < strip { 2.0 } else { 1.0 };
        v += p * exp_sq(x) / (1.0 + (2.0 * PI * x / h).exp());
    }
    v
}

/// `Im w(x)` for real `x`; odd in `x`. `Re w(x)` is simply `exp(−x²)`.
///
/// On the real axis both pole denominators reduce to a tangent:
/// the pole term's imaginary part is `e^{-x²} tan(π d)` where `d` is the
/// signed distance from `x/h` to the nearest lattice point of the other
/// branch's nodes.
pub fn im_w_real(x: f64, params: &EvalParams) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let a = x.abs();
    let v = if params.use_maclaurin() && a <= params.maclaurin_radius() {
        FRAC_2_SQRT_PI * dawson_series(a, params.maclaurin_terms())
    } else if a > HUGE_ARGUMENT || (params.use_asymptotic() && a > params.asym_radius()) {
        let terms = if a > HUGE_ARGUMENT { 1 } else { params.asym_terms() };
        asymptotic_real(a, terms, 1.0)
    } else {
        im_w_trapezoid(a, params)
    };
    v.copysign(x)
}

/// `Σ_{k>N} 1/(t_k² − s)` continuing the node lattice of `table`.
#[inline]
pub(crate) fn lattice_tail(table: &NodeTable, s: f64) -> f64 {
    table.tail.iter().rev().fold(0.0, |acc, &c| acc * s + c)
}

/// Whether the lattice-tail series is usable (and fast) at `x`.
#[inline]
pub(crate) fn tail_converges(x: f64, table: &NodeTable) -> bool {
    3.0 * x <= table.tail_start
}

/// `(1 − e^{-d})/d`, the divided difference of `e^{-s}` scaled by `e^{s₀}`.
#[inline]
pub(crate) fn exp_divided(d: f64) -> f64 {
    if d == 0.0 {
        1.0
    } else {
        -(-d).exp_m1() / d
    }
}

/// `e^d − 1` for complex `d`, without cancellation in either part.
fn exp_m1_complex(d: Complex64) -> Complex64 {
    let half = (0.5 * d.im).sin();
    Complex64::new(d.re.exp_m1() * d.im.cos() - 2.0 * half * half, d.re.exp() * d.im.sin())
}

fn exp_divided_complex(d: Complex64) -> Complex64 {
    if d == Complex64::new(0.0, 0.0) {
        Complex64::new(1.0, 0.0)
    } else {
        -exp_m1_complex(-d) / d
    }
}

/// `w(z) − e^{-z²}`, the complex form of the lattice rewrite in
/// [`im_w_lattice`]:
///
/// ```text
/// w(z) − e^{-z²} = [ih/(πz) (1 − e^{-z²})] + i(2hz/π) e^{-z²} [Σ_n (1 − e^{z²−t_n²})/(t_n² − z²) + Σ_{k>N} 1/(t_k² − z²)]
/// ```
///
/// Both sides are odd in `z`, so the lower half-plane needs no reflection.
/// Meant for small `|z|`, where `w` and `e^{-z²}` nearly cancel; requires
/// [`tail_converges`] at `|z|`.
pub(crate) fn w_minus_gaussian(z: Complex64, params: &EvalParams) -> Complex64 {
    let h = params.h();
    let (unstaggered, _) = branch(z.re.abs(), h);
    let table = if unstaggered { &params.unstaggered } else { &params.staggered };
    let z2 = z * z;
    let mut sum = Complex64::new(0.0, 0.0);
    for &t in table.scheme.nodes() {
        sum += exp_divided_complex((t - z) * (t + z));
    }
    let tail = table.tail.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z2 + c);
    let g = gaussian(z);
    let mut v = I * (2.0 * h / PI) * z * g * (sum + tail);
    if unstaggered {
        v -= I * (h / PI) * exp_m1_complex(-z2) / z;
    }
    v
}

// Below this the pole term and the node sum of Im w(x) cancel; see
// `im_w_lattice`.
const IM_W_LATTICE: f64 = 1.5;

/// The real-axis trapezoid for `Im w(x)` with `tan`/`cot` of the pole term
/// replaced by their partial-fraction series over the node lattice itself,
/// `tan(πx/h) = (2hx/π) Σ_k 1/(t_k² − x²)` (staggered) and
/// `cot(πx/h) = h/(πx) + (2hx/π) Σ_k 1/(x² − t_k²)` (unstaggered). The
/// retained nodes then pair up with the sum into positive divided
/// differences:
///
/// ```text
/// Im w(x) = [h/(πx) (1 − e^{-x²})] + (2hx/π) [Σ_n (e^{-x²} − e^{-t_n²})/(t_n² − x²) + e^{-x²} Σ_{k>N} 1/(t_k² − x²)]
/// ```
///
/// (bracketed term unstaggered only). Same value as the pole form, without
/// its cancellation near the origin.
fn im_w_lattice(a: f64, unstaggered: bool, params: &EvalParams) -> f64 {
    let h = params.h();
    let table = if unstaggered { &params.unstaggered } else { &params.staggered };
    let g = exp_neg_sq(a);
    let mut sum = 0.0;
    for &t in table.scheme.nodes() {
        sum += exp_divided((t - a) * (t + a));
    }
    let mut v = (2.0 * h / PI) * a * g * (sum + lattice_tail(table, a * a));
    if unstaggered {
        v += h / (PI * a) * -(-a * a).exp_m1();
    }
    v
}

fn im_w_trapezoid(a: f64, params: &EvalParams) -> f64 {
    let h = params.h();
    let (unstaggered, frac) = branch(a, h);
    let table = if unstaggered { &params.unstaggered } else { &params.staggered };
    if a > 0.0 && a < IM_W_LATTICE && tail_converges(a, table) {
        return im_w_lattice(a, unstaggered, params);
    }
    let (table, d) = if unstaggered {
        (&params.unstaggered, frac - 0.5)
    } else {
        (&params.staggered, if frac > 0.5 { frac - 1.0 } else { frac })
    };
    let mut sum = 0.0;
    for (&t, &c) in table.scheme.nodes().iter().zip(table.scheme.weights()) {
        sum += c / ((a - t) * (a + t));
    }
    let mut v = (2.0 * h / PI) * a * sum;
    if unstaggered {
        v += h / (PI * a);
    }
    if a <= params.re_cut() {
        v += exp_neg_sq(a) * (PI * d).tan();
    }
    v
}

/// Rising factorials `(1/2)_n`, `n = 0..16`; all exact in binary64.
const HALF_POCHHAMMER: [f64; 16] = {
    let mut c = [1.0; 16];
    let mut n = 1;
    while n < 16 {
        c[n] = c[n - 1] * (n as f64 - 0.5);
        n += 1;
    }
    c
};

/// `(1/2)_n`, from the table while it lasts.
fn half_pochhammer(n: usize) -> f64 {
    let last = HALF_POCHHAMMER.len() - 1;
    HALF_POCHHAMMER
        .get(n)
        .copied()
        .unwrap_or_else(|| (last + 1..=n).fold(HALF_POCHHAMMER[last], |c, k| c * (k as f64 - 0.5)))
}

/// `Σ_{n<terms} (1/2)_n u^n` by Horner.
#[inline]
fn horner<T>(u: T, terms: usize) -> T
where
    T: Copy + std::ops::Mul<Output = T> + std::ops::Add<f64, Output = T> + From<f64>,
{
    (0..terms).rev().fold(T::from(0.0), |acc, n| acc * u + half_pochhammer(n))
}

/// `(i/√π) Σ_{n<terms} (1/2)_n / z^{2n+1}`, Horner in `1/z²`. Valid for
/// `−π/4 < arg z < 5π/4` and large `|z|`; callers gate applicability.
pub fn w_asymptotic(z: Complex64, terms: usize) -> Complex64 {
    let r = z.inv();
    I * FRAC_1_SQRT_PI * r * horner(r * r, terms)
}

/// Real specialization of the asymptotic series on the axes:
/// `sign = 1` gives `Im w(x)`, `sign = −1` gives `erfcx(x)`.
fn asymptotic_real(x: f64, terms: usize, sign: f64) -> f64 {
    let r = 1.0 / x;
    FRAC_1_SQRT_PI * r * horner(sign * r * r, terms)
}

/// Maclaurin series of the Dawson integral, `Σ (−2)^n x^{2n+1} / (2n+1)!!`.
pub(crate) fn dawson_series(x: f64, terms: usize) -> f64 {
    let x2 = x * x;
    let mut acc = 0.0;
    for n in (0..terms).rev() {
        // coefficient ratio a_{n}/a_{n-1} = −2/(2n+1)
        acc = 1.0 - 2.0 * x2 / (2.0 * n as f64 + 3.0) * acc;
    }
    x * acc
}

/// Relative condition number `C = 2iz/(√π w(z)) − 2z²`.
pub fn cond_w(z: Complex64, params: &EvalParams) -> Complex64 {
    let wz = w(z, params).value;
    2.0 * I * z / (SQRT_PI * wz) - 2.0 * z * z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEPS;

    fn params() -> EvalParams {
        EvalParams::double_precision()
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn regions_of_sample_points() {
        let p = params();
        assert_eq!(classify_region(Complex64::new(1.0, 1.0), &p), Region::A);
        assert_eq!(classify_region(Complex64::new(10.0, 1.0), &p), Region::B);
        assert_eq!(classify_region(Complex64::new(1.0, 7.0), &p), Region::B);
        assert_eq!(classify_region(Complex64::new(3.0, -10.0), &p), Region::E);
        assert_eq!(classify_region(Complex64::new(10.0, -1.0), &p), Region::D);
        assert_eq!(classify_region(Complex64::new(1.0, -1.0), &p), Region::C);
        assert_eq!(classify_region(Complex64::new(0.0, 0.0), &p), Region::ImagAxis);
        assert_eq!(classify_region(Complex64::new(-0.0, -3.0), &p), Region::ImagAxis);
        assert_eq!(classify_region(Complex64::new(2.0, 0.0), &p), Region::RealAxis);
    }

    #[test]
    fn origin_is_exactly_one() {
        let p = params();
        assert_eq!(w_upper(Complex64::new(0.0, 0.0), &p), Complex64::new(1.0, 0.0));
        assert_eq!(w(Complex64::new(0.0, 0.0), &p).value, Complex64::new(1.0, 0.0));
        assert_eq!(erfcx_real(0.0, &p), 1.0);
        assert_eq!(im_w_real(0.0, &p), 0.0);
    }

    #[test]
    fn im_w_is_structurally_odd() {
        let p = params();
        for x in [0.01, 0.3, 1.0, 2.5, 7.0, 20.0] {
            assert_eq!(im_w_real(-x, &p), -im_w_real(x, &p));
        }
    }

    #[test]
    fn known_values() {
        let p = params();
        // w(1+i), erfcx(1), Im w(1)
        let v = w_upper(Complex64::new(1.0, 1.0), &p);
        let expect = Complex64::new(0.304_744_205_256_912_6, 0.208_218_938_202_831_6);
        assert!(rel(v, expect) <= 3.0 * DEPS, "{v}");
        assert!((erfcx_real(1.0, &p) / 0.427_583_576_155_807 - 1.0).abs() <= 3.0 * DEPS);
        assert!((im_w_real(1.0, &p) / 0.607_157_705_841_393_7 - 1.0).abs() <= 3.0 * DEPS);
    }

    #[test]
    fn imaginary_axis_value_is_real() {
        let p = params();
        let v = w_upper(Complex64::new(0.0, 6.0), &p);
        assert!(v.im.abs() <= 2.0 * DEPS * v.re);
        assert!((v.re / 0.092_776_567_800_538_35 - 1.0).abs() <= 3.0 * DEPS, "{}", v.re);
    }

    #[test]
    fn overflow_is_flagged() {
        let p = params();
        let r = w(Complex64::new(0.0, -30.0), &p);
        assert!(r.overflowed);
        assert!(!r.value.is_finite());
        let r = w(Complex64::new(1.0, -30.0), &p);
        assert_eq!(r.region, Region::E);
        assert!(r.overflowed && !r.value.is_finite());
        let r = w(Complex64::new(3.0, -10.0), &p);
        assert_eq!(r.region, Region::E);
        assert!(!r.overflowed && r.value.is_finite());
    }

    #[test]
    fn non_finite_input() {
        let p = params();
        let r = w(Complex64::new(f64::NAN, 1.0), &p);
        assert!(r.value.re.is_nan() && r.value.im.is_nan() && !r.overflowed);
        let r = w(Complex64::new(f64::INFINITY, 0.0), &p);
        assert!(r.value.re.is_nan() && r.value.im.is_nan());
        assert!(erfcx_real(f64::NAN, &p).is_nan());
        assert!(im_w_real(f64::NAN, &p).is_nan());
    }

    #[test]
    fn pochhammer_table_and_recurrence() {
        // (1/2)_n = (2n − 1)!! / 2^n
        let double_fact = |n: usize| (1..=n).map(|k| (2 * k - 1) as f64).product::<f64>();
        for n in 0..20 {
            assert_eq!(half_pochhammer(n), double_fact(n) / 2f64.powi(n as i32), "n={n}");
        }
    }

    #[test]
    fn asymptotic_leading_term() {
        let z = Complex64::new(0.0, 100.0);
        let one = w_asymptotic(z, 1);
        assert!((one.re - 1.0 / (SQRT_PI * 100.0)).abs() < 1e-18);
        let full = w_upper(z, &params());
        assert!(rel(one, full) < 1e-4);
        assert!(rel(w_asymptotic(z, 6), full) <= 3.0 * DEPS);
        assert_eq!(w_asymptotic(z, 0), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn condition_number_samples() {
        let p = params();
        assert_eq!(cond_w(Complex64::new(0.0, 0.0), &p), Complex64::new(0.0, 0.0));
        let c = cond_w(Complex64::new(10.0, 10.0), &p).norm();
        assert!((0.5..=2.0).contains(&c), "{c}");
        let c = cond_w(Complex64::new(5.0, -5.0), &p).norm();
        assert!((50.0..=200.0).contains(&c), "{c}");
    }

    #[test]
    fn branch_rule_keeps_denominators_safe() {
        let p = params();
        for k in 0..2000 {
            let x = k as f64 * 0.0137;
            let b = branch_info(Complex64::new(x, 0.0), &p);
            assert!(b.node_gap >= 0.245 * p.h(), "x={x}");
            assert!(b.pole_denominator >= std::f64::consts::SQRT_2 - 1e-12, "x={x}");
        }
    }

    #[test]
    fn dawson_series_matches_known_value() {
        // D(0.05) from the high-precision fixture generator
        let d = dawson_series(0.05, 6);
        assert!((d / 0.049_916_749_940_509_25 - 1.0).abs() < 2.0 * DEPS, "{d}");
    }
}
