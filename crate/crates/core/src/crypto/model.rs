//! Rotated settings and the pointwise outcome assignment.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::correlation::SignOutcome;
use crate::error::{Error, Result};
use crate::geometry::{norm3, UnitVec3};
use crate::sampling::{batches, Estimate, SphereSampler};

/// `â, b̂` derived from a setting pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RotatedPair {
    pub a_hat: UnitVec3,
    pub b_hat: UnitVec3,
    /// Angle between the original settings, in `[0, π]`.
    pub omega: f64,
    /// `π sin²(ω/2)`.
    pub omega_hat: f64,
}

/// `ω̂(ω) = π sin²(ω/2)`.
pub fn rotated_angle(omega: f64) -> f64 {
    PI * (0.5 * omega).sin().powi(2)
}

/// Writes `a = cos(ω/2) m + sin(ω/2) n`, `b = cos(ω/2) m - sin(ω/2) n` with `m`
/// the bisector and `n` the in-plane unit normal to it, and returns
/// `â, b̂` from the same expansion at `ω̂`.
///
/// At `ω = 0` the normal is arbitrary and `â = b̂ = a`. At `ω = π` the bisector
/// is arbitrary, but `ω̂ = π` gives `â = a`, `b̂ = b` whatever it is.
pub fn rotated_settings(a: &UnitVec3, b: &UnitVec3) -> RotatedPair {
    let omega = a.angle_to(b);
    let omega_hat = rotated_angle(omega);
    let av = a.to_array();
    let bv = b.to_array();
    let sum = [av[0] + bv[0], av[1] + bv[1], av[2] + bv[2]];
    let diff = [av[0] - bv[0], av[1] - bv[1], av[2] - bv[2]];

    let (n, m) = if norm3(diff) > 1e-300 && norm3(sum) > 1e-300 {
        (
            UnitVec3::normalize(diff).expect("non-zero"),
            UnitVec3::normalize(sum).expect("non-zero"),
        )
    } else if norm3(sum) > 1e-300 {
        let m = UnitVec3::normalize(sum).expect("non-zero");
        (m.any_orthogonal(), m)
    } else {
        let n = UnitVec3::normalize(diff).expect("non-zero");
        (n, n.any_orthogonal())
    };

    let (sh, ch) = (0.5 * omega_hat).sin_cos();
    let (m, n) = (m.to_array(), n.to_array());
    let a_hat = [
        ch * m[0] + sh * n[0],
        ch * m[1] + sh * n[1],
        ch * m[2] + sh * n[2],
    ];
    let b_hat = [
        ch * m[0] - sh * n[0],
        ch * m[1] - sh * n[1],
        ch * m[2] - sh * n[2],
    ];
    RotatedPair {
        a_hat: UnitVec3::normalize(a_hat).expect("unit combination"),
        b_hat: UnitVec3::normalize(b_hat).expect("unit combination"),
        omega,
        omega_hat,
    }
}

impl RotatedPair {
    /// `(sgn(â·λ), -sgn(b̂·λ))`.
    pub fn outcomes(&self, lambda: &UnitVec3) -> (SignOutcome, SignOutcome) {
        (
            SignOutcome::of(self.a_hat.dot(lambda)),
            -SignOutcome::of(self.b_hat.dot(lambda)),
        )
    }
}

/// Outcomes assigned by the model to settings `a, b` at hidden variable `λ`.
/// Bob's outcome depends on `a` through `b̂`.
pub fn model_outcomes(a: &UnitVec3, b: &UnitVec3, lambda: &UnitVec3) -> (SignOutcome, SignOutcome) {
    rotated_settings(a, b).outcomes(lambda)
}

/// Full-sphere Monte Carlo estimate of `⟨A B⟩`, batch `k` drawing from
/// substream `(seed, "crypto-model", k)`.
pub fn model_correlation_monte_carlo(
    a: &UnitVec3,
    b: &UnitVec3,
    n: u64,
    seed: u64,
) -> Result<Estimate> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "sample count must be at least 1".into(),
        ));
    }
    let pair = rotated_settings(a, b);
    let sum: i64 = batches(n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(k, len)| {
            let mut sampler = SphereSampler::substream(seed, "crypto-model", k);
            (0..len)
                .map(|_| {
                    let (x, y) = pair.outcomes(&sampler.next_direction());
                    (x * y).value() as i64
                })
                .sum::<i64>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .sum();
    Ok(Estimate::from_sign_sum(n, sum))
}
