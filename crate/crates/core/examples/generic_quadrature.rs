// The trapezoidal engine on user kernels: an entire one, and a Lorentzian
// whose poles need the residue correction.

use faddeeva_trapz::engine::{error_estimate, trap_quadrature, NodeScheme, PoleCorrection, SimplePole};
use faddeeva_trapz::Complex64;

pub fn run_example() -> (Complex64, Complex64, Complex64) {
    let cos = |t: Complex64| t.cos();
    let lorentz = |t: Complex64| 1.0 / (1.0 + t * t);
    let i = Complex64::new(0.0, 1.0);
    let poles = [
        SimplePole { location: i, residue: -0.5 * i },
        SimplePole { location: -i, residue: 0.5 * i },
    ];

    let s = NodeScheme::new(0.5, 12, false).unwrap();
    let c = trap_quadrature(&cos, &s, &PoleCorrection::NONE);
    println!("int cos(t) e^-t^2 = {c}  (exact sqrt(pi) e^-1/4 = {})", std::f64::consts::PI.sqrt() * (-0.25f64).exp());
    println!("predicted rule error at h=0.5: {:e}", error_estimate(&cos, 0.5).norm());

    let bare = trap_quadrature(&lorentz, &s, &PoleCorrection::NONE);
    let pc = PoleCorrection::from_simple_poles(&poles, &s).unwrap();
    let fixed = trap_quadrature(&lorentz, &s, &pc);
    println!("int e^-t^2/(1+t^2): uncorrected {bare}, corrected {fixed}, exact 1.3432934216467352");
    (c, bare, fixed)
}

#[allow(dead_code)]
fn main() {
    run_example();
}
