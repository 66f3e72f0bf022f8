use std::collections::BTreeMap;
use std::hint::black_box;
use std::time::{Duration, Instant};

use num_complex::Complex64;

use crate::errlike::{evaluate, FunctionKind};
use crate::faddeeva::{classify_region, Region};
use crate::tuning::EvalParams;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BucketTiming {
    pub region: Region,
    pub ns_per_call: f64,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub total: Duration,
    pub calls: usize,
    pub buckets: Vec<BucketTiming>,
    /// `Σ (Re + Im)` over the finite values of one pass in grid order.
    pub checksum: f64,
}

impl BenchReport {
    pub fn ns_per_call(&self) -> f64 {
        self.total.as_nanos() as f64 / self.calls.max(1) as f64
    }

    pub fn bucket(&self, region: Region) -> Option<&BucketTiming> {
        self.buckets.iter().find(|b| b.region == region)
    }
}

/// Times `kind` over `points`, grouped by evaluation region, with
/// `repetitions` passes per group. Panics if `repetitions == 0`.
pub fn bench(kind: FunctionKind, points: &[Complex64], params: &EvalParams, repetitions: usize) -> BenchReport {
    assert!(repetitions > 0, "repetitions must be positive");
    let mut groups: BTreeMap<Region, Vec<Complex64>> = BTreeMap::new();
    for &z in points {
        groups.entry(classify_region(z, params)).or_default().push(z);
    }

    let mut total = Duration::ZERO;
    let mut buckets = Vec::with_capacity(groups.len());
    for (region, zs) in &groups {
        let start = Instant::now();
        for _ in 0..repetitions {
            for &z in zs {
                black_box(evaluate(kind, black_box(z), params));
            }
        }
        let elapsed = start.elapsed();
        total += elapsed;
        let calls = zs.len() * repetitions;
        buckets.push(BucketTiming {
            region: *region,
            ns_per_call: elapsed.as_nanos() as f64 / calls as f64,
            n: zs.len(),
        });
    }

    let checksum = points
        .iter()
        .map(|&z| evaluate(kind, z, params))
        .filter(|v| v.is_finite())
        .map(|v| v.re + v.im)
        .sum();

    BenchReport { total, calls: points.len() * repetitions, buckets, checksum }
}
