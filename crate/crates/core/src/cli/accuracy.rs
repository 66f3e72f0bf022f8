use std::io::{self, Write};

use num_complex::Complex64;
use rayon::prelude::*;

use super::reference::ReferenceSet;
use crate::errlike::{evaluate, FunctionKind};
use crate::faddeeva::{self, classify_region, Region};
use crate::tuning::EvalParams;
use crate::DEPS;

pub const CSV_HEADER: &str = "z_re,z_im,relerr_deps,region,overflowed";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccuracyRow {
    pub z: Complex64,
    pub value: Complex64,
    /// Relative error in units of binary64 epsilon; NaN when the reference
    /// itself is not representable.
    pub relerr_deps: f64,
    pub region: Region,
    pub overflowed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summary {
    pub mean: f64,
    pub max: f64,
    /// Rows that entered the statistics.
    pub n: usize,
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "mean={:.6} max={:.6} n={}", self.mean, self.max, self.n)
    }
}

/// Compares `kind` on every grid point against the reference. Returns the
/// first point without a reference row as the error.
pub fn accuracy_rows(
    kind: FunctionKind,
    points: &[Complex64],
    reference: &ReferenceSet,
    params: &EvalParams,
) -> Result<Vec<AccuracyRow>, Complex64> {
    let refs = points
        .iter()
        .map(|&z| reference.get(z).copied().ok_or(z))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(points
        .par_iter()
        .zip(refs.par_iter())
        .map(|(&z, r)| {
            let (value, region, overflowed) = if kind == FunctionKind::W {
                let res = faddeeva::w(z, params);
                (res.value, res.region, res.overflowed)
            } else {
                let v = evaluate(kind, z, params);
                (v, classify_region(z, params), !v.is_finite())
            };
            AccuracyRow { z, value, relerr_deps: r.relative_error(value) / DEPS, region, overflowed }
        })
        .collect())
}

/// Mean and max over rows whose error is defined (NaN rows are skipped).
pub fn summarize<'a, I>(rows: I) -> Summary
where
    I: IntoIterator<Item = &'a AccuracyRow>,
{
    let mut sum = 0.0;
    let mut max = 0.0_f64;
    let mut n = 0;
    for r in rows {
        if r.relerr_deps.is_nan() {
            continue;
        }
        sum += r.relerr_deps;
        max = max.max(r.relerr_deps);
        n += 1;
    }
    let mean = if n == 0 { f64::NAN } else { sum / n as f64 };
    Summary { mean, max, n }
}

pub fn write_csv<W: Write>(rows: &[AccuracyRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(out, "{},{},{},{},{}", r.z.re, r.z.im, r.relerr_deps, r.region, r.overflowed)?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::reference::{Extended, ReferenceRecord};

    fn row(relerr: f64) -> AccuracyRow {
        AccuracyRow {
            z: Complex64::new(0.0, 0.0),
            value: Complex64::new(1.0, 0.0),
            relerr_deps: relerr,
            region: Region::ImagAxis,
            overflowed: false,
        }
    }

    #[test]
    fn nan_rows_are_excluded() {
        let s = summarize(&[row(1.0), row(f64::NAN), row(3.0)]);
        assert_eq!(s, Summary { mean: 2.0, max: 3.0, n: 2 });
        assert_eq!(s.to_string(), "mean=2.000000 max=3.000000 n=2");
    }

    #[test]
    fn missing_reference_is_reported() {
        let mut set = ReferenceSet::default();
        let one = Extended::parse("1.0").unwrap();
        let zero = Extended::parse("0.0").unwrap();
        set.insert(ReferenceRecord { z: Complex64::new(0.0, 0.0), re: one, im: zero });
        let p = EvalParams::double_precision();
        let pts = [Complex64::new(0.0, 0.0), Complex64::new(0.5, 0.0)];
        assert_eq!(accuracy_rows(FunctionKind::W, &pts, &set, &p), Err(pts[1]));
        let rows = accuracy_rows(FunctionKind::W, &pts[..1], &set, &p).unwrap();
        assert_eq!(rows[0].relerr_deps, 0.0);
    }
}
