// Real-argument entry points, with and without the small-|x| series.

use faddeeva_trapz::errlike::{evaluate_real, FunctionKind};
use faddeeva_trapz::tuning::EvalParams;

pub fn run_example() -> Vec<(f64, f64, f64)> {
    let plain = EvalParams::double_precision();
    let series = plain.clone().with_maclaurin(true);
    let mut rows = Vec::new();
    for x in [1e-3, 0.5, 1.0, 5.0, 26.0] {
        print!("x={x:<6}");
        for kind in [FunctionKind::Erf, FunctionKind::Erfc, FunctionKind::Erfcx, FunctionKind::Dawson] {
            let v = evaluate_real(kind, x, &plain).unwrap();
            print!("  {kind}={v:.16e}");
        }
        println!();
        let a = evaluate_real(FunctionKind::Dawson, x, &plain).unwrap();
        let b = evaluate_real(FunctionKind::Dawson, x, &series).unwrap();
        rows.push((x, a, b));
    }
    // near the origin the series keeps the odd functions at full relative accuracy
    for &(x, a, b) in &rows {
        println!("dawson({x}): lattice {a:.17e}  series {b:.17e}");
    }
    rows
}

#[allow(dead_code)]
fn main() {
    run_example();
}
