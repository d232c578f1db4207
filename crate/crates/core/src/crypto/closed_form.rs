//! Closed-form expressions for the conditional correlations on the
//! four-direction family, in the printed form and with `χ` halved.
//!
//! For a pair symmetric about the axis, the sign change of `v·λ(μ)` sits at
//! an angle whose sine is `cos τ / √(cos²τ + cot²(γ/2))`, where `γ/2` is the
//! polar angle of `v`. The printed `χ_j` carries an extra factor 2; the
//! normalized variant uses `χ_j / 2`. Which one reproduces the exact-arc
//! values is reported by [`closed_form_chsh`].

use std::f64::consts::{FRAC_PI_4, PI};

use serde::Serialize;

use crate::error::Result;

use super::chsh::{check_alpha, check_tau, conditional_chsh, ConditionalChsh};

/// A `χ_j` is singular when both `|cos τ|` and `|cos(γ_j/2)|` are below this.
pub const SINGULAR_TOLERANCE: f64 = 1e-12;

/// Per-correlation agreement required to call a closed-form variant a match.
pub const CLOSED_FORM_MATCH_TOLERANCE: f64 = 1e-9;

/// `γ₁ = π sin²α`, `γ₂ = π sin²3α`, `γ₃ = 4α + π sin²α`, `γ₄ = 4α - π sin²α`.
pub fn gamma_functions(alpha: f64) -> [f64; 4] {
    let s1 = PI * alpha.sin().powi(2);
    [
        s1,
        PI * (3.0 * alpha).sin().powi(2),
        4.0 * alpha + s1,
        4.0 * alpha - s1,
    ]
}

/// Root of `4α + π sin²α = π` on `[0, π/4]`, by bisection.
///
/// The left side is strictly increasing there (derivative `4 + π sin 2α`),
/// so the root is unique.
pub fn tilde_alpha() -> f64 {
    let g = |a: f64| 4.0 * a + PI * a.sin().powi(2) - PI;
    let (mut lo, mut hi) = (0.0, FRAC_PI_4);
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `χ_j = 2 cos τ / √(cos²τ + cot²(γ_j/2))` as printed, `NaN` at singular points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChiFunctions {
    pub alpha: f64,
    pub tau: f64,
    pub printed: [f64; 4],
}

impl ChiFunctions {
    /// `χ_j / 2`.
    pub fn normalized(&self) -> [f64; 4] {
        self.printed.map(|c| 0.5 * c)
    }

    pub fn singular(&self) -> [bool; 4] {
        self.printed.map(f64::is_nan)
    }

    pub fn is_singular(&self) -> bool {
        self.printed.iter().any(|c| c.is_nan())
    }
}

/// Evaluates `χ_j` as `2 cos τ sin(γ/2) / √(cos²τ sin²(γ/2) + cos²(γ/2))`,
/// which equals the printed form and takes its limits at `γ = 0` (χ → 0) and
/// `γ = π` (`cot → 0`).
pub fn chi_functions(alpha: f64, tau: f64) -> Result<ChiFunctions> {
    check_alpha(alpha)?;
    check_tau(tau)?;
    let ct = tau.cos();
    let printed = gamma_functions(alpha).map(|gamma| {
        let (s, c) = (0.5 * gamma).sin_cos();
        if ct.abs() < SINGULAR_TOLERANCE && c.abs() < SINGULAR_TOLERANCE {
            return f64::NAN;
        }
        let den = (ct * ct * s * s + c * c).sqrt();
        if den == 0.0 {
            0.0
        } else {
            2.0 * ct * s / den
        }
    });
    Ok(ChiFunctions {
        alpha,
        tau,
        printed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClosedFormVariant {
    #[serde(rename = "printed")]
    Printed,
    #[serde(rename = "normalized")]
    Normalized,
}

/// Correlations `[E(a,b), E(a,b'), E(a',b), E(a',b')]` and `F` from one
/// closed-form variant. Values need not lie in `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedFormValues {
    pub correlations: [f64; 4],
    pub f: f64,
}

/// Piecewise closed form; `α ≤ α̃` selects the first branch.
pub fn closed_form_values(chi: &[f64; 4], alpha: f64) -> ClosedFormValues {
    let e_ab = 2.0 * chi[0].abs() - 1.0;
    let e_apbp = 2.0 * chi[1].abs() - 1.0;
    let e_cross = if alpha <= tilde_alpha() {
        (chi[2] - chi[3]).abs() - 1.0
    } else {
        1.0 - (chi[2] + chi[3]).abs()
    };
    ClosedFormValues {
        correlations: [e_ab, e_cross, e_cross, e_apbp],
        f: e_ab + 2.0 * e_cross - e_apbp,
    }
}

/// Both closed-form variants against the exact-arc values at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedFormComparison {
    pub alpha: f64,
    pub tau: f64,
    pub chi: ChiFunctions,
    pub printed: ClosedFormValues,
    pub normalized: ClosedFormValues,
    pub exact: ConditionalChsh,
    /// Largest per-correlation deviation from the exact values.
    pub printed_deviation: f64,
    pub normalized_deviation: f64,
    /// The single variant within [`CLOSED_FORM_MATCH_TOLERANCE`], if exactly one is.
    pub matching: Option<ClosedFormVariant>,
}

fn max_deviation(values: &ClosedFormValues, exact: &[f64; 4]) -> f64 {
    values
        .correlations
        .iter()
        .zip(exact)
        .map(|(c, e)| (c - e).abs())
        .fold(0.0, f64::max)
}

pub fn closed_form_chsh(alpha: f64, tau: f64) -> Result<ClosedFormComparison> {
    let chi = chi_functions(alpha, tau)?;
    let exact = conditional_chsh(alpha, tau)?;
    let printed = closed_form_values(&chi.printed, alpha);
    let normalized = closed_form_values(&chi.normalized(), alpha);
    let e = exact.correlations.as_array();
    // NaN deviations (singular points) compare false and never match
    let printed_deviation = max_deviation(&printed, &e);
    let normalized_deviation = max_deviation(&normalized, &e);
    let printed_ok = printed_deviation <= CLOSED_FORM_MATCH_TOLERANCE;
    let normalized_ok = normalized_deviation <= CLOSED_FORM_MATCH_TOLERANCE;
    let matching = match (printed_ok, normalized_ok) {
        (true, false) => Some(ClosedFormVariant::Printed),
        (false, true) => Some(ClosedFormVariant::Normalized),
        _ => None,
    };
    Ok(ClosedFormComparison {
        alpha,
        tau,
        chi,
        printed,
        normalized,
        exact,
        printed_deviation,
        normalized_deviation,
        matching,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_6, SQRT_2};

    #[test]
    fn gamma_examples() {
        assert!((gamma_functions(FRAC_PI_6)[1] - PI).abs() < 1e-15);
        assert_eq!(gamma_functions(0.0), [0.0; 4]);
        let g = gamma_functions(FRAC_PI_4);
        assert!((g[0] - FRAC_PI_2).abs() < 1e-15);
        assert!((g[2] - 1.5 * PI).abs() < 1e-15);
        assert!((g[3] - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn tilde_alpha_root() {
        let a = tilde_alpha();
        assert!((0.561..=0.563).contains(&a), "{a}");
        assert!((4.0 * a + PI * a.sin().powi(2) - PI).abs() < 1e-10);
        // γ₃ crosses π exactly there
        assert!((gamma_functions(a)[2] - PI).abs() < 1e-10);
    }

    #[test]
    fn chi_examples() {
        let c = chi_functions(0.3, FRAC_PI_2).unwrap();
        for v in c.printed {
            assert!(v.abs() < 1e-15);
        }
        let c = chi_functions(FRAC_PI_4, 0.0).unwrap();
        assert!((c.printed[0] - SQRT_2).abs() < 1e-15);
        let c = chi_functions(FRAC_PI_6, FRAC_PI_2).unwrap();
        assert_eq!(c.singular(), [false, true, false, false]);
        assert!(c.is_singular());
        // γ₂ = π away from τ = π/2: cot → 0 limit, χ₂ = ±2
        let c = chi_functions(FRAC_PI_6, 0.2).unwrap();
        assert!((c.printed[1] - 2.0).abs() < 1e-12);
        // γ = 0 limit
        assert_eq!(chi_functions(0.0, 0.5).unwrap().printed, [0.0; 4]);
    }

    #[test]
    fn printed_form_at_tau_half_pi() {
        let c = chi_functions(0.3, FRAC_PI_2).unwrap();
        let v = closed_form_values(&c.printed, 0.3);
        assert!((v.f + 2.0).abs() < 1e-14);
    }

    #[test]
    fn normalized_matches_at_quarter_turn() {
        let cmp = closed_form_chsh(FRAC_PI_4, 0.0).unwrap();
        assert!((cmp.normalized.correlations[0] - (SQRT_2 - 1.0)).abs() < 1e-14);
        assert!((cmp.printed.correlations[0] - (2.0 * SQRT_2 - 1.0)).abs() < 1e-14);
        assert_eq!(cmp.matching, Some(ClosedFormVariant::Normalized));
    }

    #[test]
    fn normalized_variant_tracks_oracle_on_a_grid() {
        for i in 0..25 {
            for j in 0..25 {
                let alpha = FRAC_PI_4 * (i as f64 + 0.5) / 25.0;
                let tau = PI * (j as f64 + 0.5) / 25.0;
                let cmp = closed_form_chsh(alpha, tau).unwrap();
                assert!(
                    cmp.normalized_deviation < 1e-9,
                    "({alpha}, {tau}): {}",
                    cmp.normalized_deviation
                );
            }
        }
    }

    #[test]
    fn singular_point_never_matches() {
        let cmp = closed_form_chsh(FRAC_PI_6, FRAC_PI_2).unwrap();
        assert!(cmp.chi.is_singular());
        assert_eq!(cmp.matching, None);
    }
}
