// Evaluate w(z) and the error-like functions at a few complex points.

use faddeeva_trapz::errlike::{evaluate, FunctionKind};
use faddeeva_trapz::faddeeva::w;
use faddeeva_trapz::tuning::EvalParams;
use faddeeva_trapz::Complex64;

pub fn run_example() -> Vec<Complex64> {
    let params = EvalParams::double_precision();
    let points = [Complex64::new(1.0, 1.0), Complex64::new(10.0, 1.0), Complex64::new(2.0, -2.5), Complex64::new(3.0, -10.0)];
    let mut values = Vec::new();
    for z in points {
        let r = w(z, &params);
        println!("w({z}) = {:e} [region {}]", r.value, r.region);
        values.push(r.value);
    }
    let z = Complex64::new(2.0, 1.0);
    for kind in FunctionKind::ALL {
        let v = evaluate(kind, z, &params);
        println!("{kind}({z}) = {v}");
        values.push(v);
    }
    values
}

#[allow(dead_code)]
fn main() {
    run_example();
}
