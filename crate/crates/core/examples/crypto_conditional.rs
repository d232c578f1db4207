//! Conditional correlations of the crypto-nonlocal model at fixed `τ`, the
//! vanishing local averages, and the closed-form comparison.
//!
//! ```bash
//! cargo run -p nonlocality-lab --example crypto_conditional
//! ```

use std::f64::consts::{FRAC_PI_2, FRAC_PI_6};

use nonlocality_lab::crypto::{closed_form_chsh, local_averages, tilde_alpha};
use nonlocality_lab::UnitVec3;

fn main() {
    let a = UnitVec3::from_spherical(0.4, 1.1);
    let b = UnitVec3::from_spherical(2.0, -0.3);
    for tau in [0.2, 1.0, 2.5] {
        let (f, g) = local_averages(&a, &b, tau);
        println!("τ = {tau}: f(a, τ) = {f:e}, g(b, τ) = {g:e}");
    }

    println!("\nα̃ = {:.12}", tilde_alpha());
    for (alpha, tau) in [(0.3, 0.7), (0.7, 2.0), (FRAC_PI_6, FRAC_PI_2 - 0.001)] {
        let c = closed_form_chsh(alpha, tau).unwrap();
        println!(
            "(α, τ) = ({alpha:.4}, {tau:.4}): F = {:.9} [{}], printed {:.6}, normalized {:.9}, matching {:?}",
            c.exact.report.f, c.exact.report.class, c.printed.f, c.normalized.f, c.matching
        );
    }
}
