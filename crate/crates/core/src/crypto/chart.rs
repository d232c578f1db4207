//! The `(μ, τ)` chart of the unit sphere.

use std::f64::consts::{PI, TAU};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::UnitVec3;

/// Hidden variable in the `(μ, τ)` chart, `μ ∈ [0, 2π)`, `τ ∈ [0, π)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolarHidden {
    mu: f64,
    tau: f64,
}

impl PolarHidden {
    pub fn new(mu: f64, tau: f64) -> Result<Self> {
        if !(0.0..TAU).contains(&mu) || !(0.0..PI).contains(&tau) {
            return Err(Error::InvalidArgument(format!(
                "(mu, tau) = ({mu}, {tau}) outside [0, 2π) × [0, π)"
            )));
        }
        Ok(PolarHidden { mu, tau })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn direction(&self) -> UnitVec3 {
        great_circle_point(self.mu, self.tau)
    }
}

/// `λ(μ, τ) = (sin μ cos τ, sin μ sin τ, cos μ)`.
pub fn great_circle_point(mu: f64, tau: f64) -> UnitVec3 {
    let (sm, cm) = mu.sin_cos();
    let (st, ct) = tau.sin_cos();
    UnitVec3::new(sm * ct, sm * st, cm).expect("unit by construction")
}

/// Standard polar angles `(θ, φ)` to `(μ, τ)`: identity on the `y ≥ 0` half,
/// `(2π - θ, φ - π)` on `y < 0`.
///
/// The half-space is decided from `φ`: `φ ∈ [0, π)` is the first branch. The
/// meridian `φ = π` (where `y = 0`) is sent through the second branch, which
/// names the same point with `τ = 0` inside the chart range. The pole
/// `θ = 0` maps to `μ = 0`.
pub fn polar_map(theta: f64, phi: f64) -> Result<PolarHidden> {
    if !(0.0..=PI).contains(&theta) || !(0.0..TAU).contains(&phi) {
        return Err(Error::InvalidArgument(format!(
            "(theta, phi) = ({theta}, {phi}) outside [0, π] × [0, 2π)"
        )));
    }
    if phi < PI {
        PolarHidden::new(theta, phi)
    } else {
        let mu = if theta == 0.0 { 0.0 } else { TAU - theta };
        PolarHidden::new(mu, phi - PI)
    }
}

/// Inverse of [`polar_map`].
pub fn polar_unmap(h: &PolarHidden) -> (f64, f64) {
    if h.mu <= PI {
        (h.mu, h.tau)
    } else {
        (TAU - h.mu, h.tau + PI)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn upper_branch_is_identity() {
        let h = polar_map(PI / 3.0, FRAC_PI_4).unwrap();
        assert_eq!((h.mu(), h.tau()), (PI / 3.0, FRAC_PI_4));
    }

    #[test]
    fn lower_branch() {
        let h = polar_map(PI / 3.0, 5.0 * FRAC_PI_4).unwrap();
        assert!((h.mu() - (TAU - PI / 3.0)).abs() < 1e-15);
        assert!((h.tau() - FRAC_PI_4).abs() < 1e-15);
    }

    #[test]
    fn chart_names_the_same_point() {
        for i in 0..40 {
            for j in 0..80 {
                let theta = PI * (i as f64 + 0.5) / 40.0;
                let phi = TAU * (j as f64 + 0.25) / 80.0;
                let h = polar_map(theta, phi).unwrap();
                let v = UnitVec3::from_spherical(theta, phi);
                let w = h.direction();
                assert!((v.dot(&w) - 1.0).abs() < 1e-14);
                let (t2, p2) = polar_unmap(&h);
                assert!((t2 - theta).abs() < 1e-13 && (p2 - phi).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn boundary_meridian_and_pole() {
        let h = polar_map(1.0, PI).unwrap();
        assert_eq!(h.tau(), 0.0);
        assert!((h.direction().dot(&UnitVec3::from_spherical(1.0, PI)) - 1.0).abs() < 1e-15);
        let h = polar_map(0.0, 4.0).unwrap();
        assert_eq!(h.mu(), 0.0);
    }

    #[test]
    fn fixed_tau_is_a_great_circle() {
        let tau: f64 = 0.7;
        let normal = [-tau.sin(), tau.cos(), 0.0];
        for k in 0..64 {
            let mu = TAU * k as f64 / 64.0;
            let v = great_circle_point(mu, tau);
            assert!(v.dot_raw(normal).abs() < 1e-15);
        }
    }

    #[test]
    fn surface_weight_totals_four_pi() {
        // midpoint rule in μ; |sin μ| integrates to 4 per τ
        let n = 200_000;
        let h = TAU / n as f64;
        let s: f64 = (0..n).map(|k| ((k as f64 + 0.5) * h).sin().abs() * h).sum();
        assert!((s * PI - 4.0 * PI).abs() < 1e-8);
    }

    #[test]
    fn out_of_range() {
        assert!(polar_map(-0.1, 0.0).is_err());
        assert!(polar_map(0.1, TAU).is_err());
        assert!(PolarHidden::new(0.0, PI).is_err());
    }
}
