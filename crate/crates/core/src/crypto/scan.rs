//! Grid scans of the conditional CHSH value over `(α, τ)`.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_4, PI};
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::correlation::NonlocalityClass;
use crate::error::{Error, Result};

use super::chsh::{check_alpha, check_tau, conditional_chsh};

pub const DEFAULT_GRID: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanCell {
    pub alpha: f64,
    pub tau: f64,
    pub f: f64,
    pub class: NonlocalityClass,
}

/// Cells in row-major order, `α` slowest.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionScan {
    pub alpha_steps: usize,
    pub tau_steps: usize,
    pub cells: Vec<ScanCell>,
}

/// Cell-centred grid over `[0, π/4] × [0, π)`.
///
/// Nodes sit at `(i + ½)·π/(4 n_α)` and `(j + ½)·π/n_τ`; `α = π/6` is never a
/// node for any `n_α`.
pub fn region_scan(alpha_steps: usize, tau_steps: usize) -> Result<RegionScan> {
    if alpha_steps < 2 || tau_steps < 2 {
        return Err(Error::InvalidArgument(format!(
            "grid {alpha_steps}x{tau_steps}: each dimension must be at least 2"
        )));
    }
    let alphas: Vec<f64> = (0..alpha_steps)
        .map(|i| FRAC_PI_4 * (i as f64 + 0.5) / alpha_steps as f64)
        .collect();
    let taus: Vec<f64> = (0..tau_steps)
        .map(|j| PI * (j as f64 + 0.5) / tau_steps as f64)
        .collect();
    scan_grid(&alphas, &taus)
}

/// Scan over explicit node lists.
pub fn scan_grid(alphas: &[f64], taus: &[f64]) -> Result<RegionScan> {
    for &a in alphas {
        check_alpha(a)?;
    }
    for &t in taus {
        check_tau(t)?;
    }
    let nt = taus.len();
    let cells = (0..alphas.len() * nt)
        .into_par_iter()
        .map(|k| {
            let (alpha, tau) = (alphas[k / nt], taus[k % nt]);
            let c = conditional_chsh(alpha, tau).expect("nodes checked above");
            ScanCell {
                alpha,
                tau,
                f: c.report.f,
                class: c.report.class,
            }
        })
        .collect();
    Ok(RegionScan {
        alpha_steps: alphas.len(),
        tau_steps: nt,
        cells,
    })
}

impl RegionScan {
    /// Cell counts keyed by class name.
    pub fn class_counts(&self) -> BTreeMap<&'static str, usize> {
        let mut counts = BTreeMap::new();
        for c in [
            NonlocalityClass::Local,
            NonlocalityClass::QuantumNonlocal,
            NonlocalityClass::Superquantum,
        ] {
            counts.insert(c.as_str(), 0);
        }
        for cell in &self.cells {
            *counts
                .get_mut(cell.class.as_str())
                .expect("all classes present") += 1;
        }
        counts
    }

    pub fn has_all_classes(&self) -> bool {
        self.class_counts().values().all(|&n| n > 0)
    }

    /// Cell with the largest `|f|`.
    pub fn max_abs_cell(&self) -> Option<&ScanCell> {
        self.cells
            .iter()
            .max_by(|a, b| a.f.abs().total_cmp(&b.f.abs()))
    }

    pub fn max_abs_f(&self) -> f64 {
        self.max_abs_cell().map_or(0.0, |c| c.f.abs())
    }

    /// CSV with header `alpha,tau,f,class` and shortest round-trip decimals.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "alpha,tau,f,class")?;
        for c in &self.cells {
            writeln!(out, "{},{},{},{}", c.alpha, c.tau, c.f, c.class)?;
        }
        Ok(())
    }

    pub fn write_json<W: Write>(&self, out: W) -> std::io::Result<()> {
        serde_json::to_writer(out, self).map_err(std::io::Error::other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_grids() {
        assert!(region_scan(1, 10).is_err());
        assert!(region_scan(10, 1).is_err());
    }

    #[test]
    fn coarse_scan_shape() {
        let s = region_scan(8, 6).unwrap();
        assert_eq!(s.cells.len(), 48);
        assert_eq!(s.cells[6].alpha, s.cells[11].alpha);
        assert!(s.cells[0].alpha < s.cells[6].alpha);
        assert!(s.cells.iter().all(|c| c.f.abs() <= 4.0));
    }

    #[test]
    fn default_grid_has_all_classes() {
        let s = region_scan(DEFAULT_GRID, DEFAULT_GRID).unwrap();
        assert!(s.has_all_classes(), "{:?}", s.class_counts());
        let m = s.max_abs_cell().unwrap();
        assert!(m.f.abs() > 3.0 && m.f.abs() <= 4.0);
        assert!((m.alpha - PI / 6.0).abs() < 0.02, "{m:?}");
        assert!((m.tau - PI / 2.0).abs() < 0.05, "{m:?}");
    }

    #[test]
    fn csv_layout() {
        let s = region_scan(2, 2).unwrap();
        let mut buf = Vec::new();
        s.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "alpha,tau,f,class");
        assert_eq!(lines.len(), 5);
        let fields: Vec<f64> = lines[1]
            .split(',')
            .take(3)
            .map(|v| v.parse().unwrap())
            .collect();
        assert_eq!(fields[0], s.cells[0].alpha);
        assert_eq!(fields[2], s.cells[0].f);
    }
}
