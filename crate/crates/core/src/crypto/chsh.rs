//! CHSH combination of conditional correlations on the four-direction family.

use std::f64::consts::{FRAC_PI_4, PI};

use serde::Serialize;

use crate::correlation::{chsh_value, ChshReport, CorrelationSet};
use crate::error::{Error, Result};
use crate::geometry::UnitVec3;
use crate::quadrature::{integrate, Quadrature};

use super::arc::great_circle_average;
use super::model::{rotated_settings, RotatedPair};

/// Absolute tolerance of the adaptive τ quadrature.
pub const TAU_QUADRATURE_TOLERANCE: f64 = 1e-10;
const TAU_QUADRATURE_DEPTH: u32 = 40;

/// Settings in the (x, z)-plane:
/// `a = (sin α, 0, cos α)`, `a' = (-sin 3α, 0, cos 3α)`,
/// `b = (-sin α, 0, cos α)`, `b' = (sin 3α, 0, cos 3α)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FourDirectionFamily {
    pub alpha: f64,
    pub a: UnitVec3,
    pub a_prime: UnitVec3,
    pub b: UnitVec3,
    pub b_prime: UnitVec3,
}

pub fn four_directions(alpha: f64) -> Result<FourDirectionFamily> {
    check_alpha(alpha)?;
    Ok(FourDirectionFamily {
        alpha,
        a: UnitVec3::in_xz_plane(alpha),
        a_prime: UnitVec3::in_xz_plane(-3.0 * alpha),
        b: UnitVec3::in_xz_plane(-alpha),
        b_prime: UnitVec3::in_xz_plane(3.0 * alpha),
    })
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..=FRAC_PI_4).contains(&alpha) {
        return Err(Error::InvalidArgument(format!(
            "alpha = {alpha} outside [0, π/4]"
        )));
    }
    Ok(())
}

pub(crate) fn check_tau(tau: f64) -> Result<()> {
    if !(0.0..PI).contains(&tau) {
        return Err(Error::InvalidArgument(format!(
            "tau = {tau} outside [0, π)"
        )));
    }
    Ok(())
}

impl FourDirectionFamily {
    /// Setting pairs in CHSH order `(a,b), (a,b'), (a',b), (a',b')`.
    pub fn pairs(&self) -> [(UnitVec3, UnitVec3); 4] {
        [
            (self.a, self.b),
            (self.a, self.b_prime),
            (self.a_prime, self.b),
            (self.a_prime, self.b_prime),
        ]
    }

    fn rotated(&self) -> [RotatedPair; 4] {
        self.pairs().map(|(x, y)| rotated_settings(&x, &y))
    }

    /// CHSH value of the singlet, `E = -x·y`, on these settings.
    pub fn quantum_chsh(&self) -> f64 {
        let e = self.pairs().map(|(x, y)| -x.dot(&y));
        e[0] + e[1] + e[2] - e[3]
    }
}

fn pair_correlation(pair: &RotatedPair, tau: f64) -> f64 {
    great_circle_average(tau, &[pair.a_hat, pair.b_hat], |s| {
        (s[0] * -s[1]).value() as f64
    })
}

/// Conditional correlations and CHSH value at one `(α, τ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConditionalChsh {
    pub alpha: f64,
    pub tau: f64,
    pub correlations: CorrelationSet,
    #[serde(flatten)]
    pub report: ChshReport,
}

/// Exact-arc conditional correlations on the four-direction family.
pub fn conditional_chsh(alpha: f64, tau: f64) -> Result<ConditionalChsh> {
    let family = four_directions(alpha)?;
    check_tau(tau)?;
    Ok(conditional_chsh_on(&family.rotated(), alpha, tau))
}

fn conditional_chsh_on(rotated: &[RotatedPair; 4], alpha: f64, tau: f64) -> ConditionalChsh {
    let e = rotated.map(|p| pair_correlation(&p, tau));
    let correlations =
        CorrelationSet::new(e[0], e[1], e[2], e[3]).expect("arc averages lie in [-1, 1]");
    ConditionalChsh {
        alpha,
        tau,
        correlations,
        report: chsh_value(&correlations),
    }
}

/// `τ`-average of `F_τ` compared with the singlet value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TauAverage {
    pub alpha: f64,
    /// `(1/π) ∫₀^π F(α, τ) dτ`.
    pub value: f64,
    pub error_estimate: f64,
    /// `-3 cos 2α + cos 6α`, from `E = -x·y` on the four directions.
    pub quantum: f64,
    /// `-1 - 2 cos α + cos 2α`, recorded for comparison only.
    pub printed_formula: f64,
}

/// `(1/π) ∫₀^π F(α, τ) dτ` by adaptive quadrature over the exact-arc
/// integrand. The `τ` density `1/π` follows from the uniform `λ` and the
/// `|sin μ|` chart weight.
pub fn tau_average_chsh(alpha: f64) -> Result<TauAverage> {
    let family = four_directions(alpha)?;
    let rotated = family.rotated();
    let q = integrate(
        |tau| conditional_chsh_on(&rotated, alpha, tau).report.f,
        0.0,
        PI,
        TAU_QUADRATURE_TOLERANCE,
        TAU_QUADRATURE_DEPTH,
    );
    Ok(TauAverage {
        alpha,
        value: q.value / PI,
        error_estimate: q.error_estimate / PI,
        quantum: family.quantum_chsh(),
        printed_formula: -1.0 - 2.0 * alpha.cos() + (2.0 * alpha).cos(),
    })
}

/// `(1/π) ∫₀^π E_τ(a, b) dτ` for an arbitrary setting pair.
pub fn tau_average_correlation(a: &UnitVec3, b: &UnitVec3) -> Quadrature {
    let pair = rotated_settings(a, b);
    let q = integrate(
        |tau| pair_correlation(&pair, tau),
        0.0,
        PI,
        TAU_QUADRATURE_TOLERANCE,
        TAU_QUADRATURE_DEPTH,
    );
    Quadrature {
        value: q.value / PI,
        error_estimate: q.error_estimate / PI,
        evaluations: q.evaluations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlation::NonlocalityClass;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_6, FRAC_PI_8, SQRT_2};

    #[test]
    fn family_examples() {
        let f = four_directions(0.0).unwrap();
        for v in [f.a, f.a_prime, f.b, f.b_prime] {
            assert_eq!(v, UnitVec3::Z);
        }
        let f = four_directions(FRAC_PI_6).unwrap();
        assert!((f.a_prime.x() + 1.0).abs() < 1e-15 && f.a_prime.z().abs() < 1e-15);
        assert!((f.b_prime.x() - 1.0).abs() < 1e-15 && f.b_prime.z().abs() < 1e-15);
        for k in 0..=20 {
            let alpha = FRAC_PI_4 * k as f64 / 20.0;
            let f = four_directions(alpha).unwrap();
            assert!((f.a.angle_to(&f.b) - 2.0 * alpha).abs() < 1e-14);
        }
        assert!(four_directions(-0.01).is_err());
        assert!(four_directions(0.8).is_err());
    }

    #[test]
    fn quarter_turn_point() {
        let c = conditional_chsh(FRAC_PI_4, 0.0).unwrap();
        assert!((c.correlations.e_ab() - (SQRT_2 - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn collapsed_family() {
        let c = conditional_chsh(0.0, FRAC_PI_4).unwrap();
        for e in c.correlations.as_array() {
            assert!((e + 1.0).abs() < 1e-14);
        }
        assert!((c.report.f + 2.0).abs() < 1e-13);
    }

    #[test]
    fn mirror_symmetry() {
        for i in 0..15 {
            for j in 0..15 {
                let alpha = FRAC_PI_4 * (i as f64 + 0.5) / 15.0;
                let tau = PI * (j as f64 + 0.5) / 15.0;
                let c = conditional_chsh(alpha, tau).unwrap();
                assert!((c.correlations.e_ab_prime() - c.correlations.e_a_prime_b()).abs() < 1e-12);
                assert!(c.report.f.abs() <= 4.0);
            }
        }
    }

    #[test]
    fn approaches_four_near_singular_point() {
        let mut prev = 0.0;
        for d in [0.1, 0.01, 0.001, 0.0001] {
            for tau in [FRAC_PI_2 - d, FRAC_PI_2 + d] {
                let c = conditional_chsh(FRAC_PI_6, tau).unwrap();
                assert!(c.report.f.abs() > prev);
                assert_eq!(c.report.class, NonlocalityClass::Superquantum);
            }
            prev = conditional_chsh(FRAC_PI_6, FRAC_PI_2 - d)
                .unwrap()
                .report
                .f
                .abs();
        }
        assert!(
            conditional_chsh(FRAC_PI_6, FRAC_PI_2 - 0.01)
                .unwrap()
                .report
                .f
                .abs()
                > 3.8
        );
    }

    #[test]
    fn tau_average_reference_values() {
        let t = tau_average_chsh(0.0).unwrap();
        assert!((t.value + 2.0).abs() < 1e-9);
        let t = tau_average_chsh(FRAC_PI_8).unwrap();
        assert!((t.quantum + 2.0 * SQRT_2).abs() < 1e-14);
        assert!(
            (t.value - t.quantum).abs() < 1e-6,
            "{} vs {}",
            t.value,
            t.quantum
        );
        let t = tau_average_chsh(FRAC_PI_6).unwrap();
        assert!((t.quantum + 2.5).abs() < 1e-14);
        assert!((t.value - t.quantum).abs() < 1e-6);
    }

    #[test]
    fn out_of_domain() {
        assert!(conditional_chsh(0.3, PI).is_err());
        assert!(conditional_chsh(1.0, 0.3).is_err());
        assert!(tau_average_chsh(-1.0).is_err());
    }
}
