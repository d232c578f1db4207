//! Randomized numerical verification of every identity used by the curve
//! construction, reported as per-dimension maximum residuals.

use std::f64::consts::{FRAC_PI_2, PI};

use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sampling::substream_rng;

use super::basis::{joint_expectation, operator_basis, square_expectation, ObservableVector};
use super::curve::{curve_partition, plane_residual, theorem_bound, Curve};
use super::decompose::{decompose_observable, kernel_split};
use super::matrix::{
    commutator_norm, hermiticity_deviation, max_abs, random_hermitian, random_omega_observable,
    ComplexMatrix,
};
use super::state::{make_schmidt_state, transpose_residual};

pub const MAX_DIMENSION: usize = 16;

/// Tolerance for identities that are exact up to rounding.
pub const EXACT_TOLERANCE: f64 = 1e-12;
/// Tolerance for identities that pass through an eigendecomposition.
pub const EIGEN_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualCheck {
    pub name: &'static str,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DimensionReport {
    pub dimension: usize,
    pub trials: usize,
    /// Kernel dimension of the `Ω_N` observables; zero for `N = 2`.
    pub kernel_dimension: usize,
    pub checks: Vec<ResidualCheck>,
}

impl DimensionReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    /// `theorem_bound(n, 1, 2)` strictly decreasing on `n = 2, …, 1024`.
    pub strictly_decreasing: bool,
    pub at_one: f64,
    pub at_million: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub seed: u64,
    pub dimensions: Vec<DimensionReport>,
    pub bound: BoundReport,
    pub pass: bool,
}

#[derive(Default)]
struct Maxima([f64; CHECKS.len()]);

const CHECKS: [(&str, f64); 17] = [
    ("state_norm", EXACT_TOLERANCE),
    ("reduced_density", EXACT_TOLERANCE),
    ("transpose_identity", EXACT_TOLERANCE),
    ("basis_hermiticity", EXACT_TOLERANCE),
    ("basis_orthonormality", EXACT_TOLERANCE),
    ("joint_expectation", EXACT_TOLERANCE),
    ("square_expectation", EXACT_TOLERANCE),
    ("decomposition_reconstruction", EIGEN_TOLERANCE),
    ("decomposition_commutation", EXACT_TOLERANCE),
    ("decomposition_spectrum", EIGEN_TOLERANCE),
    ("decomposition_trace", EXACT_TOLERANCE),
    ("kernel_split_unit_norm", EIGEN_TOLERANCE),
    ("curve_endpoint", EIGEN_TOLERANCE),
    ("curve_norm", EIGEN_TOLERANCE),
    ("curve_spectrum", EIGEN_TOLERANCE),
    ("curve_planarity", EIGEN_TOLERANCE),
    ("curve_spacing", EIGEN_TOLERANCE),
];

impl Maxima {
    fn record(&mut self, name: &str, value: f64) {
        let k = CHECKS
            .iter()
            .position(|c| c.0 == name)
            .expect("known check");
        // NaN must surface as a failure
        if value.is_nan() || value > self.0[k] {
            self.0[k] = value;
        }
    }
}

fn random_vector(n: usize, rng: &mut impl Rng) -> Result<ObservableVector> {
    ObservableVector::new(n, (0..n * n).map(|_| rng.sample(StandardNormal)).collect())
}

/// Distance of the sorted spectrum of `m` from `{-1, 0, …, 0, 1}`.
fn omega_spectrum_distance(m: &ComplexMatrix) -> f64 {
    let n = m.nrows();
    let mut ev: Vec<f64> = m
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    ev.sort_by(f64::total_cmp);
    let mut d = (ev[0] + 1.0).abs().max((ev[n - 1] - 1.0).abs());
    for x in &ev[1..n - 1] {
        d = d.max(x.abs());
    }
    d
}

fn verify_dimension(n: usize, trials: usize, seed: u64) -> Result<DimensionReport> {
    let state = make_schmidt_state(n)?;
    let basis = operator_basis(n)?;
    let mut m = Maxima::default();

    m.record("state_norm", (state.norm() - 1.0).abs());
    let mixed = ComplexMatrix::identity(n, n).unscale(n as f64);
    m.record(
        "reduced_density",
        max_abs(&(state.reduced_density() - mixed)),
    );
    for r in 0..basis.len() {
        m.record("basis_hermiticity", hermiticity_deviation(basis.f(r)));
        for s in 0..basis.len() {
            let e = state.expectation(basis.f(r), &basis.g(s))?;
            let want = if r == s { 1.0 } else { 0.0 };
            m.record("basis_orthonormality", (e.re - want).abs().max(e.im.abs()));
        }
    }

    let mut kernel_dimension = 0;
    for trial in 0..trials {
        let mut rng = substream_rng(seed, &format!("theorem/{n}"), trial as u64);

        let x = random_hermitian(n, &mut rng);
        m.record("transpose_identity", transpose_residual(&state, &x)?);

        let a = random_vector(n, &mut rng)?;
        let b = random_vector(n, &mut rng)?;
        m.record(
            "joint_expectation",
            (joint_expectation(&a, &b, &state, &basis)? - a.dot(&b)?).abs(),
        );
        m.record(
            "square_expectation",
            (square_expectation(&a, &state, &basis)? - a.norm_sq()).abs(),
        );

        let d = decompose_observable(&x)?;
        m.record(
            "decomposition_reconstruction",
            max_abs(&(d.reconstruct() - &x)),
        );
        let local = state.expectation(&x, &state.identity())?.re;
        m.record("decomposition_trace", (d.alpha0 - local).abs());
        for (i, t) in d.terms.iter().enumerate() {
            m.record(
                "decomposition_spectrum",
                omega_spectrum_distance(&t.operator),
            );
            m.record("decomposition_trace", t.operator.trace().norm());
            for u in &d.terms[i + 1..] {
                m.record(
                    "decomposition_commutation",
                    commutator_norm(&t.operator, &u.operator),
                );
            }
        }

        let omega = random_omega_observable(n, &mut rng);
        let split = kernel_split(&omega)?;
        kernel_dimension = split.kernel_dimension();
        let norm = split.a_tilde.iter().map(|v| v * v).sum::<f64>().sqrt();
        m.record("kernel_split_unit_norm", (norm - 1.0).abs());

        let av = ObservableVector::from_operator(&basis, &omega)?;
        let parts = 1 + trial % 12;
        let p = curve_partition(&av, parts, &basis)?;
        m.record("curve_endpoint", p.endpoint_residual());
        m.record("curve_norm", p.norm_residual());
        m.record("curve_spacing", p.spacing_residual());

        let curve = Curve::new(&av, &basis)?;
        let theta = rng.random_range(0.0..PI);
        let op = curve.operator_at(theta);
        m.record("curve_spectrum", omega_spectrum_distance(&op));
        m.record("curve_spectrum", op.trace().norm());
        let q = curve.point(FRAC_PI_2, &basis)?;
        let pts = [curve.point(theta, &basis)?, p.nodes[parts].clone()];
        m.record(
            "curve_planarity",
            plane_residual(&av, &q, &pts).max(plane_residual(&av, &q, &p.nodes)),
        );
    }

    let checks = CHECKS
        .iter()
        .zip(m.0)
        .map(|(&(name, tolerance), max_residual)| ResidualCheck {
            name,
            max_residual,
            tolerance,
            pass: max_residual < tolerance,
        })
        .collect();
    Ok(DimensionReport {
        dimension: n,
        trials,
        kernel_dimension,
        checks,
    })
}

fn verify_bound() -> BoundReport {
    let strictly_decreasing =
        (2..1024u64).all(|n| theorem_bound(n + 1, 1.0, 2) < theorem_bound(n, 1.0, 2));
    let at_one = theorem_bound(1, 1.0, 2);
    let at_million = theorem_bound(1_000_000, 1.0, 2);
    BoundReport {
        strictly_decreasing,
        at_one,
        at_million,
        pass: strictly_decreasing && at_million < 3e-6,
    }
}

/// Runs all checks for `N = nmin, …, nmax` with `trials` random draws each.
/// Trial `t` at dimension `N` draws from substream `("theorem/N", t)`.
pub fn verify_theorem_machinery(
    nmin: usize,
    nmax: usize,
    trials: usize,
    seed: u64,
) -> Result<TheoremReport> {
    if nmin < 2 || nmin > nmax || nmax > MAX_DIMENSION {
        return Err(Error::InvalidArgument(format!(
            "need 2 ≤ nmin ≤ nmax ≤ {MAX_DIMENSION}, got nmin = {nmin}, nmax = {nmax}"
        )));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let dimensions = (nmin..=nmax)
        .map(|n| verify_dimension(n, trials, seed))
        .collect::<Result<Vec<_>>>()?;
    let bound = verify_bound();
    let pass = bound.pass && dimensions.iter().all(DimensionReport::pass);
    Ok(TheoremReport {
        seed,
        dimensions,
        bound,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let r = verify_theorem_machinery(2, 4, 5, 1).unwrap();
        for d in &r.dimensions {
            for c in &d.checks {
                assert!(c.pass, "N = {}: {c:?}", d.dimension);
            }
        }
        assert!(r.pass);
        assert_eq!(r.dimensions[0].kernel_dimension, 0);
        assert_eq!(r.dimensions[2].kernel_dimension, 2);
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(verify_theorem_machinery(1, 3, 1, 0).is_err());
        assert!(verify_theorem_machinery(4, 3, 1, 0).is_err());
        assert!(verify_theorem_machinery(2, 17, 1, 0).is_err());
        assert!(verify_theorem_machinery(2, 3, 0, 0).is_err());
    }

    #[test]
    fn deterministic() {
        let a = verify_theorem_machinery(2, 3, 3, 9).unwrap();
        let b = verify_theorem_machinery(2, 3, 3, 9).unwrap();
        assert_eq!(a, b);
    }
}
