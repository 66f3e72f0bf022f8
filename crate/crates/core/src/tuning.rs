//! Derivation of every algorithm constant from a target relative accuracy.

use std::f64::consts::PI;

use crate::engine::NodeScheme;
use crate::{Error, Result, DEPS};

const SQRT_PI: f64 = 1.772_453_850_905_516;

const FIXED_POINT_START: f64 = 5.0;
const FIXED_POINT_TOL: f64 = 1e-9;
const FIXED_POINT_MAX_STEPS: usize = 100;

pub const DEFAULT_ASYM_RADIUS: f64 = 30.0;
pub const DEFAULT_ASYM_TERMS: usize = 6;
pub const DEFAULT_MACLAURIN_RADIUS: f64 = 0.05;

fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps < 1.0 {
        Ok(())
    } else {
        Err(Error::Accuracy(eps))
    }
}

/// Node spacing before the empirical correction: `π / sqrt(ln(2/eps))`.
pub fn uncorrected_step_size(eps: f64) -> Result<f64> {
    check_eps(eps)?;
    Ok(PI / (2.0 / eps).ln().sqrt())
}

/// Node spacing `h = h0 (1 - 0.06 h0)`.
pub fn step_size(eps: f64) -> Result<f64> {
    let h0 = uncorrected_step_size(eps)?;
    Ok(h0 * (1.0 - 0.06 * h0))
}

/// Number of retained terms `N = ceil(sqrt(ln(2h/(√π eps)) / h²))`, shared by
/// the staggered and unstaggered sums.
pub fn truncation_terms(eps: f64, h: f64) -> Result<usize> {
    check_eps(eps)?;
    let arg = 2.0 * h / (SQRT_PI * eps);
    if !(h > 0.0) || !(arg > 1.0) {
        return Err(Error::Truncation { eps, h });
    }
    let n = (arg.ln() / (h * h)).sqrt();
    // Rounding must not push an exact integer to the next one.
    Ok(((n - 1e-12).ceil() as usize).max(1))
}

/// Iterates `r <- map(r)` from 5 until the step is below 1e-9, then makes sure
/// the returned point lies on the feasible side (`residual(r) >= 0`).
fn fixed_point(map: impl Fn(f64) -> f64, residual: impl Fn(f64) -> f64) -> Result<f64> {
    let mut r = FIXED_POINT_START;
    for _ in 0..FIXED_POINT_MAX_STEPS {
        let next = map(r);
        if !next.is_finite() {
            break;
        }
        let delta = (next - r).abs();
        r = next;
        if delta < FIXED_POINT_TOL {
            // Iterates approach the root monotonically; one more increment
            // of the last step size clears the remaining gap when the approach
            // was from below.
            if residual(r) < 0.0 {
                r += delta.max(f64::EPSILON * r);
            }
            return Ok(r);
        }
    }
    Err(Error::NoConvergence(FIXED_POINT_MAX_STEPS))
}

/// Defining inequality of the pole-neglect cutoff, as `lhs - rhs`.
pub fn pole_neglect_residual(r: f64, eps: f64) -> f64 {
    r * r - (SQRT_PI * r / (std::f64::consts::SQRT_2 * eps)).ln()
}

/// Defining inequality of the Gaussian cutoff at `r = sqrt(g)`, as `lhs - rhs`.
pub fn gaussian_residual(r: f64, eps: f64) -> f64 {
    r * r - (2.0 * SQRT_PI * r * r / eps).ln()
}

/// Real-part bound beyond which the pole term of the upper-half-plane formula
/// is negligible: root of `r² = ln(√π r / (√2 eps))` (≈ 6.17 at binary64).
pub fn pole_neglect_cutoff(eps: f64) -> Result<f64> {
    check_eps(eps)?;
    let c = SQRT_PI / (std::f64::consts::SQRT_2 * eps);
    fixed_point(|r| (c * r).ln().sqrt(), |r| pole_neglect_residual(r, eps))
}

/// Level `g` of the curves `Im(z)² − Re(z)² = ±g` separating the lower
/// half-plane regions: the root of `g = ln(2√π g / eps)` (≈ 41.024 at
/// binary64).
///
/// Dropping `2e^{-z²}` next to `w(−z) ~ 1/(√π|z|)` costs a relative
/// `2√π |z| e^{Re(z²)}`. Along the level curve `|z|` is unbounded, so `|z|` is
/// bounded here by `g` rather than `√g`; at the curve's vertex this is the
/// inequality `r² ≥ ln(2√π r/eps)` with extra margin.
pub fn gaussian_cutoff(eps: f64) -> Result<f64> {
    check_eps(eps)?;
    let c = 2.0 * SQRT_PI / eps;
    let r = fixed_point(|r| (c * r * r).ln().sqrt(), |r| gaussian_residual(r, eps))?;
    Ok(r * r)
}

/// Smallest number of Maclaurin terms such that the first omitted term of the
/// erf, erfi and Dawson series is below `eps / 8` relative to the leading one,
/// anywhere in `|x| <= radius`.
fn maclaurin_terms(eps: f64, radius: f64) -> usize {
    let x2 = radius * radius;
    let mut erf_term = 1.0; // x^{2n} / n!
    let mut dawson_term = 1.0; // (2x²)^n / (2n+1)!!
    for n in 1..64usize {
        let nf = n as f64;
        erf_term *= x2 / nf;
        dawson_term *= 2.0 * x2 / (2.0 * nf + 1.0);
        if (erf_term / (2.0 * nf + 1.0)).max(dawson_term) <= eps / 8.0 {
            return n;
        }
    }
    64
}

/// Number of coefficients kept for the node-lattice tail, see [`NodeTable`].
pub(crate) const TAIL_TERMS: usize = 24;

/// One node scheme plus the power-series coefficients of its lattice tail
///
/// ```text
/// Σ_{k>N} 1/(t_k² − s) = Σ_j tail_j s^j,   tail_j = ζ(2j+2, a) / h^{2j+2}
/// ```
///
/// where `t_k = (k − shift) h` continues the node lattice past the last node
/// and `a = N + 1 − shift`. The series converges for `|s| < (a h)²`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct NodeTable {
    pub scheme: NodeScheme,
    pub tail: Vec<f64>,
    /// `a h`, the first node beyond the retained ones.
    pub tail_start: f64,
}

impl NodeTable {
    fn new(h: f64, n_terms: usize, staggered: bool) -> Self {
        let shift = if staggered { 0.5 } else { 0.0 };
        let scheme = NodeScheme::new(h, n_terms, staggered).expect("validated spacing and term count");
        let a = n_terms as f64 + 1.0 - shift;
        let tail = (0..TAIL_TERMS)
            .map(|j| {
                let s = 2.0 * j as f64 + 2.0;
                hurwitz_zeta(s, a) / h.powf(s)
            })
            .collect();
        Self { scheme, tail, tail_start: a * h }
    }
}

// B_{2j} / (2j)!
const BERNOULLI_OVER_FACTORIAL: [f64; 9] = [
    0.083_333_333_333_333_33,
    -0.001_388_888_888_888_889,
    3.306_878_306_878_307e-5,
    -8.267_195_767_195_768e-7,
    2.087_675_698_786_81e-8,
    -5.284_190_138_687_493e-10,
    1.338_253_653_068_467_9e-11,
    -3.389_680_296_322_582_7e-13,
    8.586_062_056_277_845e-15,
];

/// Hurwitz zeta `Σ_{k≥0} (a + k)^{-s}` for `s > 1`, `a > 0`: sixteen explicit
/// terms, then Euler–Maclaurin.
fn hurwitz_zeta(s: f64, a: f64) -> f64 {
    const DIRECT: usize = 16;
    let b = a + DIRECT as f64;
    let mut sum = b.powf(1.0 - s) / (s - 1.0) + 0.5 * b.powf(-s);
    // rising product s(s+1)...(s+2j-2) times b^{-s-2j+1}
    let mut factor = s * b.powf(-s - 1.0);
    for (j, &c) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        let term = c * factor;
        sum += term;
        if term.abs() <= 1e-18 * sum {
            break;
        }
        let m = 2.0 * j as f64 + 1.0;
        factor *= (s + m) * (s + m + 1.0) / (b * b);
    }
    for k in (0..DIRECT).rev() {
        sum += (a + k as f64).powf(-s);
    }
    sum
}

/// Every derived constant for one target accuracy. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalParams {
    eps: f64,
    h: f64,
    n_terms: usize,
    strip_height: f64,
    re_cut: f64,
    g_cut: f64,
    asym_radius: f64,
    asym_terms: usize,
    use_asymptotic: bool,
    use_maclaurin: bool,
    maclaurin_radius: f64,
    maclaurin_terms: usize,
    pub(crate) unstaggered: NodeTable,
    pub(crate) staggered: NodeTable,
}

/// Builds the full parameter set for `eps` with the given fast-path toggles.
pub fn build_params(eps: f64, use_asymptotic: bool, use_maclaurin: bool) -> Result<EvalParams> {
    let h = step_size(eps)?;
    let n_terms = truncation_terms(eps, h)?;
    Ok(EvalParams {
        eps,
        h,
        n_terms,
        strip_height: PI / h,
        re_cut: pole_neglect_cutoff(eps)?,
        g_cut: gaussian_cutoff(eps)?,
        asym_radius: DEFAULT_ASYM_RADIUS,
        asym_terms: DEFAULT_ASYM_TERMS,
        use_asymptotic,
        use_maclaurin,
        maclaurin_radius: DEFAULT_MACLAURIN_RADIUS,
        maclaurin_terms: maclaurin_terms(eps, DEFAULT_MACLAURIN_RADIUS),
        unstaggered: NodeTable::new(h, n_terms, false),
        staggered: NodeTable::new(h, n_terms, true),
    })
}

impl EvalParams {
    pub fn new(eps: f64) -> Result<Self> {
        build_params(eps, false, false)
    }

    /// Parameters for binary64 machine epsilon, fast paths off.
    pub fn double_precision() -> Self {
        Self::new(DEPS).expect("binary64 epsilon is a valid target")
    }

    pub fn with_asymptotic(mut self, on: bool) -> Self {
        self.use_asymptotic = on;
        self
    }

    pub fn with_maclaurin(mut self, on: bool) -> Self {
        self.use_maclaurin = on;
        self
    }

    /// Replaces the derived node spacing; `N`, `π/h` and the node tables are
    /// recomputed for the new spacing. Debugging aid only: accuracy is no
    /// longer tied to `eps`.
    pub fn with_step_override(mut self, h: f64) -> Result<Self> {
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::Scheme(format!("node spacing must be positive, got {h}")));
        }
        self.h = h;
        self.n_terms = truncation_terms(self.eps, h)?;
        self.strip_height = PI / h;
        self.unstaggered = NodeTable::new(h, self.n_terms, false);
        self.staggered = NodeTable::new(h, self.n_terms, true);
        Ok(self)
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }
    pub fn h(&self) -> f64 {
        self.h
    }
    pub fn n_terms(&self) -> usize {
        self.n_terms
    }
    /// `π / h`, the height of the strip in which the poles at `±z` matter.
    pub fn strip_height(&self) -> f64 {
        self.strip_height
    }
    pub fn re_cut(&self) -> f64 {
        self.re_cut
    }
    pub fn g_cut(&self) -> f64 {
        self.g_cut
    }
    pub fn asym_radius(&self) -> f64 {
        self.asym_radius
    }
    pub fn asym_terms(&self) -> usize {
        self.asym_terms
    }
    pub fn use_asymptotic(&self) -> bool {
        self.use_asymptotic
    }
    pub fn use_maclaurin(&self) -> bool {
        self.use_maclaurin
    }
    pub fn maclaurin_radius(&self) -> f64 {
        self.maclaurin_radius
    }
    pub fn maclaurin_terms(&self) -> usize {
        self.maclaurin_terms
    }

    /// Leading-order quadrature error bound `2 exp(-π²/h²)`.
    pub fn discretization_bound(&self) -> f64 {
        2.0 * (-self.strip_height * self.strip_height).exp()
    }
}
