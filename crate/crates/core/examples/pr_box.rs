//! The PR box, its hidden-bit realization, and its CHSH value.
//!
//! ```bash
//! cargo run -p nonlocality-lab --example pr_box
//! ```

use nonlocality_lab::pr_box::{
    pr_chsh, pr_ideal_table, pr_table_from_hidden, PrPrior, PrRealization,
};

fn main() {
    let ideal = pr_ideal_table();
    println!("{ideal}");
    let report = pr_chsh();
    println!("F = {}, class = {}", report.f, report.class);

    println!("\n x y λ | a b");
    for r in PrRealization::table() {
        println!(" {} {} {} | {} {}", r.x, r.y, r.lambda, r.a, r.b);
    }

    let mixed = pr_table_from_hidden(&PrPrior::uniform());
    println!(
        "\nuniform prior reproduces the ideal table: {}",
        mixed == ideal
    );
    let biased = pr_table_from_hidden(&PrPrior::new(0.8, 0.2).unwrap());
    println!("prior (0.8, 0.2):\n{biased}");
}
