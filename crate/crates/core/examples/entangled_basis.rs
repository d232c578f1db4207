//! Maximally entangled states, the state-adapted operator basis and joint
//! expectations as dot products of coordinate vectors.
//!
//! ```bash
//! cargo run -p nonlocality-lab --example entangled_basis
//! ```

use nonlocality_lab::entangled::{
    joint_expectation, make_schmidt_state, operator_basis, random_hermitian, square_expectation,
    transpose_residual, ObservableVector,
};
use nonlocality_lab::sampling::substream_rng;

fn main() {
    let n = 3;
    let state = make_schmidt_state(n).unwrap();
    let basis = operator_basis(n).unwrap();
    println!("N = {n}, {} basis operators", basis.len());
    for (label, f) in basis.labels().iter().zip(basis.operators()).take(4) {
        println!("{label:?}:{f}");
    }

    let mut rng = substream_rng(1, "entangled-example", 0);
    let x = random_hermitian(n, &mut rng);
    let y = random_hermitian(n, &mut rng);
    println!(
        "transpose residual = {:e}",
        transpose_residual(&state, &x).unwrap()
    );

    let a = ObservableVector::from_operator(&basis, &x).unwrap();
    let b = ObservableVector::from_operator(&basis, &y).unwrap();
    println!(
        "⟨A ⊗ B⟩ = {:.12}",
        joint_expectation(&a, &b, &state, &basis).unwrap()
    );
    println!("a·b     = {:.12}", a.dot(&b).unwrap());
    println!(
        "⟨A²⟩    = {:.12}",
        square_expectation(&a, &state, &basis).unwrap()
    );
    println!("|a|²    = {:.12}", a.norm_sq());
}
