//! Identity checks that need no reference data.

use std::f64::consts::{FRAC_2_SQRT_PI, SQRT_2};
use std::fmt;

use num_complex::Complex64;

use crate::errlike::{erf, erfc};
use crate::exact::gaussian;
use crate::faddeeva::{branch_info, faddeeva, w_upper};
use crate::tuning::EvalParams;
use crate::DEPS;

const SAMPLES: usize = 10_000;
const SEED: u64 = 0x5eed_f00d_2024_0521;
const FD_STEP: f64 = 1e-6;
const FD_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Largest observed violation, in the check's own unit.
    pub worst: f64,
    pub tolerance: f64,
    pub samples: usize,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "check={} status={} worst={:.3e} tol={:.3e} n={}",
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.worst,
            self.tolerance,
            self.samples
        )
    }
}

// splitmix64; the sample must not depend on an external generator's stream.
struct Sampler(u64);

impl Sampler {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        let u = (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
        lo + (hi - lo) * u
    }

    /// Uniform in the disc `|z| ≤ radius`, optionally restricted to `Im z ≥ 0`.
    fn disc(&mut self, radius: f64, upper: bool) -> Complex64 {
        loop {
            let z = Complex64::new(self.uniform(-radius, radius), self.uniform(-radius, radius));
            if z.norm() <= radius {
                return if upper { Complex64::new(z.re, z.im.abs()) } else { z };
            }
        }
    }
}

struct Tracker {
    name: &'static str,
    tolerance: f64,
    worst: f64,
    samples: usize,
}

impl Tracker {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self { name, tolerance, worst: 0.0, samples: 0 }
    }

    fn record(&mut self, violation: f64) {
        self.samples += 1;
        // NaN counts as failure
        if !(violation <= self.worst) {
            self.worst = if violation.is_nan() { f64::INFINITY } else { violation };
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            passed: self.worst <= self.tolerance,
            worst: self.worst,
            tolerance: self.tolerance,
            samples: self.samples,
        }
    }
}

fn rel(diff: Complex64, scale: f64) -> f64 {
    let d = diff.norm();
    if d == 0.0 {
        0.0
    } else {
        d / scale
    }
}

/// `w(z) + w(−z) = 2e^{-z²}`, relative to the larger side, in deps.
pub fn check_reflection(params: &EvalParams) -> CheckResult {
    let mut t = Tracker::new("reflection", 8.0);
    let mut s = Sampler(SEED);
    for _ in 0..SAMPLES {
        let z = s.disc(8.0, false);
        let g2 = 2.0 * gaussian(z);
        let (a, b) = (faddeeva(z, params), faddeeva(-z, params));
        if !g2.is_finite() || !a.is_finite() || !b.is_finite() {
            continue;
        }
        let scale = a.norm().max(b.norm()).max(g2.norm());
        t.record(rel(a + b - g2, scale) / DEPS);
    }
    t.finish()
}

/// `w(−z̄) = conj(w(z))`, in deps.
pub fn check_conjugate_symmetry(params: &EvalParams) -> CheckResult {
    let mut t = Tracker::new("conjugate_symmetry", 4.0);
    let mut s = Sampler(SEED ^ 1);
    for _ in 0..SAMPLES {
        let z = s.disc(8.0, false);
        let a = faddeeva(z, params);
        let b = faddeeva(-z.conj(), params);
        if !a.is_finite() {
            continue;
        }
        t.record(rel(b - a.conj(), a.norm()) / DEPS);
    }
    t.finish()
}

/// `erf(z) + erfc(z) = 1`, relative to `max(1, |erf z|, |erfc z|)`, in deps.
pub fn check_sum_identity(params: &EvalParams) -> CheckResult {
    let mut t = Tracker::new("erf_plus_erfc", 8.0);
    let mut s = Sampler(SEED ^ 2);
    for _ in 0..SAMPLES {
        let z = s.disc(10.0, false);
        let (a, b) = (erf(z, params), erfc(z, params));
        let scale = 1.0_f64.max(a.norm()).max(b.norm());
        t.record(rel(a + b - 1.0, scale) / DEPS);
    }
    t.finish()
}

/// Central difference of `w` against `w' = 2i/√π − 2z w`, for `|z| ≤ 5`,
/// `Im z ≥ 0`.
///
/// The residual is measured relative to the size of the identity's operands,
/// `max(2/√π, |2z w|)`. Near `|z| = 5` the two operands cancel to about
/// `|w'| ≈ |w|/5`, and a single ulp of `w` then moves the difference quotient
/// by about `1e-9 |w'|` at `δ = 1e-6`; relative to `|w'|` itself the check
/// would measure rounding noise rather than `w`.
///
/// The tolerance widens with the quadrature's own discretization bound so a
/// deliberately coarse step (`--h-override`) is not misreported as a
/// differentiation failure.
pub fn check_derivative(params: &EvalParams) -> CheckResult {
    let tol = FD_TOLERANCE.max(1e3 * params.discretization_bound());
    let mut t = Tracker::new("derivative_identity", tol);
    let mut s = Sampler(SEED ^ 3);
    for _ in 0..SAMPLES / 10 {
        let z = s.disc(5.0, true);
        if z.im < FD_STEP {
            continue;
        }
        t.record(derivative_residual(z, params));
    }
    t.finish()
}

/// `|Δw/Δz − (2i/√π − 2z w)| / max(2/√π, |2z w|)`. The divided difference
/// uses the representable step `(z+δ) − (z−δ)`.
pub fn derivative_residual(z: Complex64, params: &EvalParams) -> f64 {
    let i = Complex64::new(0.0, 1.0);
    let (z1, z2) = (z + FD_STEP, z - FD_STEP);
    let fd = (faddeeva(z1, params) - faddeeva(z2, params)) / (z1 - z2);
    let two_z_w = 2.0 * z * faddeeva(z, params);
    let exact = FRAC_2_SQRT_PI * i - two_z_w;
    rel(fd - exact, FRAC_2_SQRT_PI.max(two_z_w.norm()))
}

/// `Re w(x) = e^{-x²}` on `[−26, 26]`, in deps.
pub fn check_real_axis(params: &EvalParams) -> CheckResult {
    let mut t = Tracker::new("real_axis", 2.0);
    for k in 0..=2000 {
        let x = -26.0 + 52.0 * k as f64 / 2000.0;
        let expect = gaussian(Complex64::new(x, 0.0)).re;
        let got = faddeeva(Complex64::new(x, 0.0), params).re;
        t.record(rel(Complex64::new(got - expect, 0.0), expect) / DEPS);
    }
    t.finish()
}

/// `w(iy)` is real for `y ∈ [0, 26]`, for the general upper-half-plane
/// formula as well as the dedicated axis path, in deps of `erfcx(y)`.
pub fn check_imag_axis(params: &EvalParams) -> CheckResult {
    let mut t = Tracker::new("imag_axis", 2.0);
    for k in 0..=1000 {
        let y = 26.0 * k as f64 / 1000.0;
        let z = Complex64::new(0.0, y);
        let axis = faddeeva(z, params);
        let general = w_upper(z, params);
        t.record(axis.im.abs().max(general.im.abs()) / axis.re / DEPS);
    }
    t.finish()
}

/// On the real axis the stagger rule keeps every sum denominator at least
/// `0.245 h` from a node and `|1 ∓ e^{-2πix/h}| ≥ √2 − 1e-12`. The worst value
/// reported is the smallest ratio to those bounds, so a pass means `worst ≥ 1`.
pub fn check_denominators(params: &EvalParams) -> CheckResult {
    let h = params.h();
    let mut min_ratio = f64::INFINITY;
    let mut samples = 0;
    for k in 0..=30_000 {
        let x = 30.0 * k as f64 / 30_000.0;
        let info = branch_info(Complex64::new(x, 0.0), params);
        let r = (info.node_gap / (0.245 * h)).min(info.pole_denominator / (SQRT_2 - 1e-12));
        min_ratio = min_ratio.min(r);
        samples += 1;
    }
    CheckResult { name: "denominator_bounds", passed: min_ratio >= 1.0, worst: min_ratio, tolerance: 1.0, samples }
}

pub fn run_all(params: &EvalParams) -> Vec<CheckResult> {
    vec![
        check_reflection(params),
        check_conjugate_symmetry(params),
        check_sum_identity(params),
        check_derivative(params),
        check_real_axis(params),
        check_imag_axis(params),
        check_denominators(params),
    ]
}
