//! Exponentially convergent trapezoidal rule for integrals
//!
//! ```text
//! f = ∫ K(t) exp(-t^2) dt     over the real line
//! ```
//!
//! with `K` even and meromorphic in the strip `|Im t| < π/h`. Pole
//! contributions are supplied by the caller as a [`PoleCorrection`]; for
//! kernels whose poles are simple and known, [`PoleCorrection::from_simple_poles`]
//! builds it from pole locations and residues.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::{Error, Result};

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// The even factor `K(t)` of the integrand. The argument may be complex: the
/// quadrature itself only samples the real axis, while [`error_estimate`]
/// evaluates `K(iπ/h)`.
pub trait Kernel {
    fn eval(&self, t: Complex64) -> Complex64;
}

impl<F> Kernel for F
where
    F: Fn(Complex64) -> Complex64,
{
    #[inline]
    fn eval(&self, t: Complex64) -> Complex64 {
        self(t)
    }
}

#[inline]
fn at_real<K: Kernel + ?Sized>(kernel: &K, t: f64) -> Complex64 {
    kernel.eval(Complex64::new(t, 0.0))
}

/// Node spacing, number of retained terms and node placement, with the
/// Gaussian weights `exp(-t_n²)` of the positive nodes precomputed.
///
/// Unstaggered nodes sit at `0, ±h, ±2h, …`; staggered nodes at
/// `±h/2, ±3h/2, …`.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeScheme {
    h: f64,
    staggered: bool,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl NodeScheme {
    pub fn new(h: f64, n_terms: usize, staggered: bool) -> Result<Self> {
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::Scheme(format!("node spacing must be positive, got {h}")));
        }
        if n_terms == 0 {
            return Err(Error::Scheme("at least one term is required".into()));
        }
        let shift = if staggered { 0.5 } else { 0.0 };
        let nodes: Vec<f64> = (1..=n_terms).map(|n| (n as f64 - shift) * h).collect();
        let weights = nodes.iter().map(|&t| crate::exact::exp_neg_sq(t)).collect();
        Ok(Self { h, staggered, nodes, weights })
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn n_terms(&self) -> usize {
        self.nodes.len()
    }

    pub fn staggered(&self) -> bool {
        self.staggered
    }

    /// Half-width of the strip in which poles must be accounted for.
    pub fn strip_height(&self) -> f64 {
        PI / self.h
    }

    /// Positive nodes in ascending order.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// `exp(-t²)` at each positive node.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

/// A simple pole of the kernel `K` at `location` with residue `residue`
/// (the residue of `K` alone, without the Gaussian).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimplePole {
    pub location: Complex64,
    pub residue: Complex64,
}

/// Total contribution of the kernel's poles to the trapezoidal formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleCorrection {
    value: Complex64,
}

impl PoleCorrection {
    /// No poles in the strip.
    pub const NONE: Self = Self { value: Complex64 { re: 0.0, im: 0.0 } };

    pub fn new(value: Complex64) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::NonFiniteCorrection(value));
        }
        Ok(Self { value })
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    /// Residue sums for a set of simple poles:
    ///
    /// ```text
    /// 2πi Σ_strip Res[K e^{-t²} / (1 ∓ e^{-2πit/h})] − 2πi Σ_{-π/h<Im<0} Res[K e^{-t²}]
    /// ```
    ///
    /// with `−` for unstaggered and `+` for staggered nodes. Poles on the
    /// strip edges `Im t = ±π/h`, and poles on the real axis in the second
    /// sum, count with weight one half; the integral is then a principal
    /// value. Poles coinciding with a node are not supported.
    pub fn from_simple_poles(poles: &[SimplePole], scheme: &NodeScheme) -> Result<Self> {
        let strip = scheme.strip_height();
        let sign = if scheme.staggered { 1.0 } else { -1.0 };
        let two_pi_i = Complex64::new(0.0, 2.0 * PI);
        let mut total = Complex64::new(0.0, 0.0);
        for pole in poles {
            let p = pole.location;
            let gauss_res = pole.residue * crate::exact::gaussian(p);

            let strip_weight = edge_weight(p.im.abs(), strip);
            if strip_weight > 0.0 {
                let denom = 1.0 + sign * (-two_pi_i * p / scheme.h).exp();
                total += two_pi_i * strip_weight * gauss_res / denom;
            }

            let lower_weight = if p.im < 0.0 && p.im > -strip {
                1.0
            } else if p.im == 0.0 || p.im == -strip {
                0.5
            } else {
                0.0
            };
            if lower_weight > 0.0 {
                total -= two_pi_i * lower_weight * gauss_res;
            }
        }
        Self::new(total)
    }
}

fn edge_weight(dist: f64, strip: f64) -> f64 {
    if dist < strip {
        1.0
    } else if dist == strip {
        0.5
    } else {
        0.0
    }
}

/// Trapezoidal estimate of `∫ K(t) e^{-t²} dt` plus the pole correction.
///
/// Terms are summed in ascending node order. The truncation and
/// discretization errors are not added; choose `h` and `N` so that both are
/// below the target accuracy. A non-finite kernel value at a node propagates
/// into the result.
pub fn trap_quadrature<K: Kernel + ?Sized>(
    kernel: &K,
    scheme: &NodeScheme,
    correction: &PoleCorrection,
) -> Complex64 {
    let h = scheme.h;
    let mut sum = Complex64::new(0.0, 0.0);
    for (&t, &g) in scheme.nodes.iter().zip(&scheme.weights) {
        sum += at_real(kernel, t) * g;
    }
    let mut result = 2.0 * h * sum;
    if !scheme.staggered {
        result += h * at_real(kernel, 0.0);
    }
    result + correction.value
}

/// Leading-order discretization error `2√π e^{-π²/h²} K(iπ/h)`.
///
/// For the unstaggered rule the quadrature overshoots the integral by this
/// amount; for the staggered rule it undershoots by the same amount.
pub fn error_estimate<K: Kernel + ?Sized>(kernel: &K, h: f64) -> Complex64 {
    let a = PI / h;
    2.0 * SQRT_PI * (-a * a).exp() * kernel.eval(Complex64::new(0.0, a))
}

pub const BRUTE_FORCE_MIN_STEPS: usize = 10_000;

/// Plain composite trapezoid of `K(t) e^{-t²}` over `[-half_width, half_width]`.
///
/// Slow and only second-order accurate for generic integrands; it exists as an
/// independent oracle for [`trap_quadrature`]. The kernel must be pole-free on
/// the segment. Summation is compensated.
pub fn brute_force_integral<K: Kernel + ?Sized>(
    kernel: &K,
    half_width: f64,
    steps: usize,
) -> Result<Complex64> {
    if steps < BRUTE_FORCE_MIN_STEPS {
        return Err(Error::TooFewSteps { min: BRUTE_FORCE_MIN_STEPS, got: steps });
    }
    let dx = 2.0 * half_width / steps as f64;
    let f = |k: usize| {
        let t = -half_width + k as f64 * dx;
        at_real(kernel, t) * (-t * t).exp()
    };
    let mut re = Neumaier::default();
    let mut im = Neumaier::default();
    for k in 0..=steps {
        let mut v = f(k);
        if k == 0 || k == steps {
            v *= 0.5;
        }
        re.add(v.re);
        im.add(v.im);
    }
    Ok(Complex64::new(re.total(), im.total()) * dx)
}

#[derive(Default)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Spot-check `K(t) == K(-t)` at the given real points, to relative
/// tolerance `rel_tol`.
pub fn check_even<K: Kernel + ?Sized>(kernel: &K, points: &[f64], rel_tol: f64) -> Result<()> {
    for &t in points {
        let a = at_real(kernel, t);
        let b = at_real(kernel, -t);
        let scale = a.norm().max(b.norm());
        if (a - b).norm() > rel_tol * scale {
            return Err(Error::OddKernel { t });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(_: Complex64) -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    #[test]
    fn scheme_rejects_bad_parameters() {
        assert!(NodeScheme::new(0.0, 12, false).is_err());
        assert!(NodeScheme::new(-0.5, 12, false).is_err());
        assert!(NodeScheme::new(f64::NAN, 12, false).is_err());
        assert!(NodeScheme::new(0.5, 0, true).is_err());
    }

    #[test]
    fn nodes_ascend() {
        let s = NodeScheme::new(0.5, 4, true).unwrap();
        assert_eq!(s.nodes(), [0.25, 0.75, 1.25, 1.75]);
        assert_eq!(s.weights()[0], (-0.0625f64).exp());
        let s = NodeScheme::new(0.5, 3, false).unwrap();
        assert_eq!(s.nodes(), [0.5, 1.0, 1.5]);
    }

    #[test]
    fn non_finite_correction_is_rejected() {
        assert!(PoleCorrection::new(Complex64::new(f64::NAN, 0.0)).is_err());
        assert!(PoleCorrection::new(Complex64::new(0.0, f64::INFINITY)).is_err());
    }

    #[test]
    fn nan_kernel_propagates() {
        let s = NodeScheme::new(0.5, 12, false).unwrap();
        let k = |t: Complex64| if t.re == 1.0 { Complex64::new(f64::NAN, 0.0) } else { one(t) };
        assert!(trap_quadrature(&k, &s, &PoleCorrection::NONE).re.is_nan());
    }

    #[test]
    fn error_estimate_closed_form() {
        let e = error_estimate(&one, 1.0);
        let expect = 2.0 * SQRT_PI * (-PI * PI).exp();
        assert!((e.re - expect).abs() < 1e-18);
        assert!((e.re - 1.8335e-4).abs() < 1e-8);
        let small = error_estimate(&one, 0.5022).norm();
        assert!(small < 2.22e-16 && (small - 3.6e-17).abs() < 0.1e-17);
        assert_eq!(error_estimate(&one, 0.05).norm(), 0.0);
    }

    #[test]
    fn brute_force_needs_enough_steps() {
        assert!(matches!(brute_force_integral(&one, 8.0, 100), Err(Error::TooFewSteps { .. })));
    }

    #[test]
    fn evenness_check_flags_odd_parts() {
        let odd = |t: Complex64| t;
        assert_eq!(check_even(&odd, &[0.3, 1.7], 1e-12), Err(Error::OddKernel { t: 0.3 }));
        let even = |t: Complex64| 1.0 / (1.0 + t * t);
        assert!(check_even(&even, &[0.3, 1.7, 5.0], 1e-14).is_ok());
    }
}
