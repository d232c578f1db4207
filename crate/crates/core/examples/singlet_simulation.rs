//! Singlet correlations `-a·b` from one PR box and two shared random unit
//! vectors per round.
//!
//! ```bash
//! cargo run --release -p nonlocality-lab --example singlet_simulation
//! ```

use nonlocality_lab::singlet_sim::{random_direction_pairs, SingletSummary};
use nonlocality_lab::UnitVec3;

fn main() {
    let n = 1_000_000;
    let seed = 2024;
    let mut pairs = vec![(UnitVec3::Z, UnitVec3::Z), (UnitVec3::Z, UnitVec3::X)];
    pairs.extend(random_direction_pairs(seed, 4));
    println!("{:>9} {:>9} {:>9}  within 4σ", "-a·b", "ê", "stderr");
    for (i, (a, b)) in pairs.into_iter().enumerate() {
        let s = SingletSummary::simulate(a, b, n, seed + i as u64).unwrap();
        println!(
            "{:>9.5} {:>9.5} {:>9.5}  {}",
            s.quantum_reference,
            s.e_hat,
            s.stderr,
            s.within_sigmas(4.0)
        );
    }
}
