//! Decomposition of an observable into commuting `{-1, 0, 1}` operators, the
//! curve from `a` to `-a`, and the partition bound that vanishes as the
//! partition is refined.
//!
//! ```bash
//! cargo run -p nonlocality-lab --example theorem_curve
//! ```

use nonlocality_lab::entangled::{
    curve_partition, decompose_observable, kernel_split, max_abs, operator_basis, random_hermitian,
    random_omega_observable, theorem_bound, verify_theorem_machinery, ObservableVector,
};
use nonlocality_lab::sampling::substream_rng;

fn main() {
    let n = 4;
    let mut rng = substream_rng(7, "theorem-example", 0);
    let x = random_hermitian(n, &mut rng);
    let d = decompose_observable(&x).unwrap();
    println!("α₀ = {:.6}", d.alpha0);
    for t in &d.terms {
        println!("α_j = {:.6}", t.coefficient);
    }
    println!(
        "reconstruction error = {:e}",
        max_abs(&(d.reconstruct() - &x))
    );

    let basis = operator_basis(n).unwrap();
    let omega = random_omega_observable(n, &mut rng);
    let split = kernel_split(&omega).unwrap();
    println!(
        "\nkernel dimension {}, ã = {:?}",
        split.kernel_dimension(),
        split.a_tilde
    );
    let a = ObservableVector::from_operator(&basis, &omega).unwrap();
    let p = curve_partition(&a, 6, &basis).unwrap();
    println!(
        "partition n = 6: endpoint {:e}, norm {:e}, spacing {:e}",
        p.endpoint_residual(),
        p.norm_residual(),
        p.spacing_residual()
    );

    println!();
    for parts in [1u64, 2, 10, 1000, 1_000_000] {
        println!(
            "bound(n = {parts}) = {:e}",
            theorem_bound(parts, a.norm_sq(), n)
        );
    }

    let report = verify_theorem_machinery(2, 6, 20, 1).unwrap();
    println!("\nall identities hold for N = 2..6: {}", report.pass);
}
