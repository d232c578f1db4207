//! Compares the output-sign conventions of the PR-box singlet simulation.
//! Conventions in the same family differ by flipping both outputs.
//!
//! ```bash
//! cargo run --release -p nonlocality-lab --example singlet_conventions
//! ```

use nonlocality_lab::singlet_sim::{estimate_singlet_correlation_with, CerfConvention};
use nonlocality_lab::UnitVec3;

fn main() {
    let a = UnitVec3::in_xz_plane(0.3);
    let b = UnitVec3::in_xz_plane(1.4);
    println!("-a·b = {:.5}", -a.dot(&b));
    for conv in CerfConvention::ALL {
        let r = estimate_singlet_correlation_with(conv, &a, &b, 400_000, 5).unwrap();
        println!(
            "{conv:?} (family {}): ê = {:.5} ± {:.5}, P(A=0) = {:.4}, P(B=0) = {:.4}",
            conv.family(),
            r.estimate.mean,
            r.estimate.stderr,
            r.alice_zero,
            r.bob_zero
        );
    }
}
