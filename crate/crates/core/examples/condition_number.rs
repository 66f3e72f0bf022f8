// How much of an observed error the function itself accounts for.

use faddeeva_trapz::faddeeva::{cond_w, faddeeva};
use faddeeva_trapz::tuning::EvalParams;
use faddeeva_trapz::{Complex64, DEPS};

pub fn run_example() -> Vec<f64> {
    let params = EvalParams::double_precision();
    let mut conds = Vec::new();
    for z in [Complex64::new(0.5, 0.5), Complex64::new(10.0, 10.0), Complex64::new(5.0, -5.0), Complex64::new(20.0, -1.0)] {
        let c = cond_w(z, &params).norm();
        println!("z={z:<10} |w|={:.3e} cond={c:.3e}  expect ~{:.1e} relative error", faddeeva(z, &params).norm(), c * DEPS);
        conds.push(c);
    }
    conds
}

#[allow(dead_code)]
fn main() {
    run_example();
}
