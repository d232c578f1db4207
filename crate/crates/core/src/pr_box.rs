//! The Popescu-Rohrlich box and its deterministic hidden-bit realization.
//!
//! The box accepts bits `x, y` and returns bits `a, b` with
//! `a + b = x·y (mod 2)`, each admitted pair equally likely. The hidden-bit
//! model fixes the outputs from `(x, y, λ)` as
//! `a = x + λ`, `b = x + λ - x·y` (mod 2).

use serde::Serialize;

use crate::correlation::{
    chsh_value, correlations_from_table, BoxTable, ChshReport, TABLE_TOLERANCE,
};
use crate::error::{Error, Result};

/// Prior over the hidden bit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PrPrior {
    p0: f64,
    p1: f64,
}

impl PrPrior {
    pub fn new(p0: f64, p1: f64) -> Result<Self> {
        if !(p0 >= 0.0 && p1 >= 0.0) || (p0 + p1 - 1.0).abs() > TABLE_TOLERANCE {
            return Err(Error::InvalidArgument(format!(
                "hidden-bit prior ({p0}, {p1}) is not a distribution"
            )));
        }
        Ok(PrPrior { p0, p1 })
    }

    pub fn uniform() -> Self {
        PrPrior { p0: 0.5, p1: 0.5 }
    }

    /// `P(λ = lambda)`.
    pub fn weight(&self, lambda: u8) -> f64 {
        match lambda {
            0 => self.p0,
            1 => self.p1,
            _ => panic!("hidden variable must be a bit, got {lambda}"),
        }
    }
}

/// One row of the hidden-bit model: inputs, hidden bit and the outputs they fix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrRealization {
    pub x: u8,
    pub y: u8,
    pub lambda: u8,
    pub a: u8,
    pub b: u8,
}

impl PrRealization {
    pub fn new(x: u8, y: u8, lambda: u8) -> Self {
        let (a, b) = pr_hidden_outputs(x, y, lambda);
        PrRealization { x, y, lambda, a, b }
    }

    /// All eight rows, in the order `(x, y, λ)` = (0,0,0), (0,0,1), (1,0,0), ...
    /// with `y` as the slowest index.
    pub fn table() -> Vec<PrRealization> {
        let mut rows = Vec::with_capacity(8);
        for y in 0..2 {
            for x in 0..2 {
                for lambda in 0..2 {
                    rows.push(PrRealization::new(x, y, lambda));
                }
            }
        }
        rows
    }

    /// `(a + b) mod 2 = x·y`.
    pub fn satisfies_pr_relation(&self) -> bool {
        (self.a + self.b) % 2 == self.x * self.y
    }
}

/// Ideal box: for each `(x, y)` the two pairs with `a ⊕ b = x·y` at 1/2 each.
pub fn pr_ideal_table() -> BoxTable {
    BoxTable::from_fn(|x, y, a, b| if (a ^ b) == (x & y) { 0.5 } else { 0.0 })
        .expect("ideal PR rows are normalized")
}

/// Deterministic outputs `(a, b)` of the hidden-bit model.
///
/// # Panics
/// If any argument is not a bit.
pub fn pr_hidden_outputs(x: u8, y: u8, lambda: u8) -> (u8, u8) {
    assert!(x <= 1 && y <= 1 && lambda <= 1, "inputs must be bits");
    let a = (x + lambda) % 2;
    // x + λ - x·y ≥ -1, shift by 2 before reducing
    let b = (x + lambda + 2 - x * y) % 2;
    (a, b)
}

/// Deterministic table of the hidden-bit model at a fixed `λ`.
pub fn pr_slice_table(lambda: u8) -> BoxTable {
    BoxTable::deterministic(|x, y| pr_hidden_outputs(x, y, lambda))
}

/// Prior-weighted average of the two deterministic slices.
pub fn pr_table_from_hidden(prior: &PrPrior) -> BoxTable {
    BoxTable::mixture(&[
        (prior.weight(0), pr_slice_table(0)),
        (prior.weight(1), pr_slice_table(1)),
    ])
    .expect("valid prior yields a valid mixture")
}

/// CHSH value of the ideal box, computed from its table.
pub fn pr_chsh() -> ChshReport {
    chsh_value(&correlations_from_table(&pr_ideal_table()))
}
