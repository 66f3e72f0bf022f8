// Reference-free identity checks, at the tuned step and at a coarse one.

use faddeeva_trapz::cli::selftest::{run_all, CheckResult};
use faddeeva_trapz::tuning::EvalParams;

pub fn run_example() -> (Vec<CheckResult>, Vec<CheckResult>) {
    let tuned = EvalParams::double_precision();
    let coarse = tuned.clone().with_step_override(0.9).unwrap();
    let a = run_all(&tuned);
    let b = run_all(&coarse);
    for (label, results) in [("h tuned", &a), ("h = 0.9", &b)] {
        println!("{label}");
        for r in results {
            println!("  {r}");
        }
    }
    (a, b)
}

#[allow(dead_code)]
fn main() {
    run_example();
}
