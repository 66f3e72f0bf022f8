// Per-region cost of w, with and without the far-field series.

use faddeeva_trapz::cli::bench::{bench, BenchReport};
use faddeeva_trapz::cli::GridSpec;
use faddeeva_trapz::errlike::FunctionKind;
use faddeeva_trapz::tuning::EvalParams;

pub fn run_example() -> (BenchReport, BenchReport) {
    let points = GridSpec::new((-40.0, 40.0), (-40.0, 40.0), 101, 101).unwrap().points();
    let plain = EvalParams::double_precision();
    let fast = plain.clone().with_asymptotic(true);
    let a = bench(FunctionKind::W, &points, &plain, 5);
    let b = bench(FunctionKind::W, &points, &fast, 5);
    for (label, rep) in [("trapezoid", &a), ("asymptotic", &b)] {
        println!("{label}: {:.1} ns/call", rep.ns_per_call());
        for bucket in &rep.buckets {
            println!("  {:>9} n={:<5} {:.1} ns/call", bucket.region, bucket.n, bucket.ns_per_call);
        }
    }
    (a, b)
}

#[allow(dead_code)]
fn main() {
    run_example();
}
