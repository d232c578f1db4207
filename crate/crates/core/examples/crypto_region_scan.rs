//! Region map of the conditional CHSH value over `(α, τ)`, written as CSV,
//! and the approach of `|F|` to 4 near `(π/6, π/2)`.
//!
//! ```bash
//! cargo run --release -p nonlocality-lab --example crypto_region_scan -- scan.csv
//! ```

use std::f64::consts::{FRAC_PI_2, FRAC_PI_6};
use std::fs::File;
use std::io::BufWriter;

use nonlocality_lab::crypto::{conditional_chsh, region_scan};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| "scan.csv".into());
    let scan = region_scan(200, 200).unwrap();
    scan.write_csv(BufWriter::new(File::create(&path).unwrap()))
        .unwrap();
    println!("wrote {path}: {:?}", scan.class_counts());
    println!("max |F| on grid = {:.6}", scan.max_abs_f());

    for d in [1e-1, 1e-2, 1e-3, 1e-4, 1e-6] {
        let lo = conditional_chsh(FRAC_PI_6, FRAC_PI_2 - d).unwrap().report.f;
        let hi = conditional_chsh(FRAC_PI_6, FRAC_PI_2 + d).unwrap().report.f;
        println!("δ = {d:e}: F(π/2 - δ) = {lo:.9}, F(π/2 + δ) = {hi:.9}");
    }
}
