//! No-signaling, parameter independence and outcome independence on a few
//! tables: the PR box, its deterministic slices, and a product box.
//!
//! ```bash
//! cargo run -p nonlocality-lab --example independence_checks
//! ```

use nonlocality_lab::correlation::{
    check_no_signaling, check_outcome_independence, check_parameter_independence, locality_check,
    BoxTable,
};
use nonlocality_lab::pr_box::{pr_ideal_table, pr_slice_table};

fn describe(name: &str, t: &BoxTable) {
    let ns = check_no_signaling(t);
    let pi = check_parameter_independence(t);
    let oi = check_outcome_independence(t);
    println!("{name}");
    println!(
        "  no-signaling {} (max deviation {})",
        ns.holds, ns.max_deviation
    );
    println!(
        "  parameter independence {} witness {:?}",
        pi.holds, pi.witness
    );
    println!(
        "  outcome independence {} witness {:?}",
        oi.holds, oi.witness
    );
    println!("  local {}", locality_check(t));
}

fn main() {
    describe("PR box", &pr_ideal_table());
    describe("slice λ = 0", &pr_slice_table(0));
    describe("slice λ = 1", &pr_slice_table(1));
    let product = BoxTable::product([[0.7, 0.3], [0.2, 0.8]], [[0.5, 0.5], [0.9, 0.1]]).unwrap();
    describe("product box", &product);
}
