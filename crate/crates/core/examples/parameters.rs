// Node spacing, term count and cutoffs as functions of the target accuracy.

use faddeeva_trapz::tuning::{uncorrected_step_size, EvalParams};

pub fn run_example() -> Vec<EvalParams> {
    let mut out = Vec::new();
    println!("{:>10} {:>8} {:>8} {:>3} {:>8} {:>9}", "eps", "h0", "h", "N", "re_cut", "g");
    for eps in [1e-4, 1e-8, 1e-12, f64::EPSILON] {
        let p = EvalParams::new(eps).unwrap();
        println!(
            "{eps:>10.3e} {:>8.5} {:>8.5} {:>3} {:>8.4} {:>9.4}",
            uncorrected_step_size(eps).unwrap(),
            p.h(),
            p.n_terms(),
            p.re_cut(),
            p.g_cut()
        );
        out.push(p);
    }
    out
}

#[allow(dead_code)]
fn main() {
    run_example();
}
