#![allow(dead_code)]

use std::path::PathBuf;

use faddeeva_trapz::cli::accuracy::{accuracy_rows, AccuracyRow};
use faddeeva_trapz::cli::reference::{Extended, ReferenceSet};
use faddeeva_trapz::errlike::FunctionKind;
use faddeeva_trapz::faddeeva::cond_w;
use faddeeva_trapz::tuning::EvalParams;
use faddeeva_trapz::{Complex64, DEPS};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn reference(name: &str) -> ReferenceSet {
    ReferenceSet::from_path(&data_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Column order of `axis_functions.csv` after `x`.
pub const AXIS_KINDS: [FunctionKind; 6] = [
    FunctionKind::Erf,
    FunctionKind::Erfc,
    FunctionKind::Erfcx,
    FunctionKind::Erfi,
    FunctionKind::Dawson,
    FunctionKind::ImW,
];

pub struct AxisRow {
    pub x: f64,
    pub values: Vec<Extended>,
}

impl AxisRow {
    pub fn get(&self, kind: FunctionKind) -> Extended {
        let i = AXIS_KINDS.iter().position(|&k| k == kind).expect("kind has an axis column");
        self.values[i]
    }
}

pub fn axis_functions() -> Vec<AxisRow> {
    let mut rdr = csv::Reader::from_path(data_path("axis_functions.csv")).unwrap();
    rdr.records()
        .map(|rec| {
            let rec = rec.unwrap();
            let x = rec[0].parse().unwrap();
            let values = (1..rec.len()).map(|i| Extended::parse(&rec[i]).unwrap()).collect();
            AxisRow { x, values }
        })
        .collect()
}

/// Relative error of a real value in deps; NaN if the reference is not
/// representable.
pub fn rel_deps(v: f64, r: Extended) -> f64 {
    if !r.hi.is_finite() {
        return f64::NAN;
    }
    if r.hi == 0.0 {
        return if v == 0.0 { 0.0 } else { f64::INFINITY };
    }
    r.diff_from(v).abs() / r.hi.abs() / DEPS
}

pub fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

/// Rows of the inset-square fixture, evaluated in fixture order.
pub fn fixture_rows(name: &str, params: &EvalParams) -> Vec<AccuracyRow> {
    let refs = reference(name);
    let points: Vec<Complex64> = refs.rows().iter().map(|r| r.z).collect();
    accuracy_rows(FunctionKind::W, &points, &refs, params).expect("every point has a reference")
}

/// Largest error among points with `|cond_w| ≤ 10`.
pub fn worst_well_conditioned(rows: &[AccuracyRow], params: &EvalParams) -> (f64, Complex64) {
    rows.iter()
        .filter(|r| !r.relerr_deps.is_nan() && cond_w(r.z, params).norm() <= 10.0)
        .map(|r| (r.relerr_deps, r.z))
        .fold((0.0, Complex64::new(0.0, 0.0)), |a, b| if b.0 > a.0 { b } else { a })
}

/// The first 200 sector rows lie in `1 ≤ |z| ≤ 26`; the rest are far-field
/// points for the asymptotic bucket.
pub const SECTOR_NEAR: usize = 200;

/// `(near, far)` sector rows, as unordered point lists.
pub fn sector_points() -> (Vec<Complex64>, Vec<Complex64>) {
    let refs = reference("sector_w.csv");
    let pts: Vec<Complex64> = refs.rows().iter().map(|r| r.z).collect();
    (pts[..SECTOR_NEAR].to_vec(), pts[SECTOR_NEAR..].to_vec())
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// `exp(-z²)` with the exponent carried to twice working precision through
/// fused multiply-adds.
pub fn gaussian(z: Complex64) -> Complex64 {
    let (x, y) = (z.re, z.im);
    let (yy, xx) = (y * y, x * x);
    let (re, re_err) = two_sum(yy, -xx);
    let re_lo = re_err + (y.mul_add(y, -yy) - x.mul_add(x, -xx));
    let xy = x * y;
    let (im, im_lo) = (-2.0 * xy, -2.0 * x.mul_add(y, -xy));
    Complex64::from_polar(re.exp(), im) * Complex64::new(1.0 + re_lo, im_lo)
}

/// `exp(-x²)` for real `x`, same technique.
pub fn gaussian_real(x: f64) -> f64 {
    let xx = x * x;
    (-xx).exp() * (1.0 - x.mul_add(x, -xx))
}
