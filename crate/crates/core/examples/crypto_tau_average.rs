//! Averaging the conditional CHSH value over `τ` recovers the singlet value,
//! including Tsirelson's bound at `α = π/8`.
//!
//! ```bash
//! cargo run -p nonlocality-lab --example crypto_tau_average
//! ```

use std::f64::consts::PI;

use nonlocality_lab::crypto::{
    model_correlation_monte_carlo, tau_average_chsh, tau_average_correlation,
};
use nonlocality_lab::UnitVec3;

fn main() {
    for alpha in [0.0, PI / 16.0, PI / 8.0, PI / 6.0, PI / 4.0] {
        let t = tau_average_chsh(alpha).unwrap();
        println!(
            "α = {alpha:.6}: ⟨F⟩ = {:.9}, singlet {:.9}, difference {:.1e}",
            t.value,
            t.quantum,
            (t.value - t.quantum).abs()
        );
    }

    let a = UnitVec3::from_spherical(0.9, 0.2);
    let b = UnitVec3::from_spherical(2.1, 1.7);
    let q = tau_average_correlation(&a, &b);
    let mc = model_correlation_monte_carlo(&a, &b, 1_000_000, 3).unwrap();
    println!("\n-a·b = {:.6}", -a.dot(&b));
    println!("τ quadrature = {:.9}", q.value);
    println!("sphere Monte Carlo = {:.6} ± {:.6}", mc.mean, mc.stderr);
}
