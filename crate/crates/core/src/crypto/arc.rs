//! Exact averages over the great circle `τ = const`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::correlation::SignOutcome;
use crate::geometry::{dot3, UnitVec3};

use super::model::rotated_settings;

/// `(1/4) ∫₀^{2π} g(sgn(v₁·λ(μ)), …, sgn(v_k·λ(μ))) |sin μ| dμ` at fixed `τ`.
///
/// On the circle, `v·λ(μ) = q sin μ + p cos μ` with `p = v_z`,
/// `q = v_x cos τ + v_y sin τ`, which vanishes at the two antipodal angles
/// `atan2(q, p) ± π/2`. Those angles, together with `0`, `π` and `2π`, cut
/// the circle into arcs on which every sign is constant and `|sin μ|` has a
/// fixed sign, so each arc contributes `g · |cos lo - cos hi|`.
///
/// A vector with `p = q = 0` is orthogonal to the whole circle and reads
/// `sgn(0) = +1` everywhere.
pub fn great_circle_average<F>(tau: f64, vectors: &[UnitVec3], integrand: F) -> f64
where
    F: Fn(&[SignOutcome]) -> f64,
{
    let (st, ct) = tau.sin_cos();
    let mut cuts = Vec::with_capacity(3 + 2 * vectors.len());
    cuts.extend_from_slice(&[0.0, PI, TAU]);
    for v in vectors {
        let p = v.z();
        let q = v.x() * ct + v.y() * st;
        if p == 0.0 && q == 0.0 {
            continue;
        }
        let phase = q.atan2(p);
        cuts.push((phase + FRAC_PI_2).rem_euclid(TAU));
        cuts.push((phase - FRAC_PI_2).rem_euclid(TAU));
    }
    cuts.sort_by(f64::total_cmp);

    let mut signs = vec![SignOutcome::Plus; vectors.len()];
    let mut total = 0.0;
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if hi <= lo {
            continue;
        }
        let mid = 0.5 * (lo + hi);
        let (sm, cm) = mid.sin_cos();
        let lambda = [sm * ct, sm * st, cm];
        for (s, v) in signs.iter_mut().zip(vectors) {
            *s = SignOutcome::of(dot3(v.to_array(), lambda));
        }
        total += integrand(&signs) * (lo.cos() - hi.cos()).abs();
    }
    0.25 * total
}

/// `E_τ(a, b) = (1/4) ∫ A B |sin μ| dμ` for the model's outcomes.
pub fn conditional_correlation(a: &UnitVec3, b: &UnitVec3, tau: f64) -> f64 {
    let pair = rotated_settings(a, b);
    great_circle_average(tau, &[pair.a_hat, pair.b_hat], |s| {
        (s[0] * -s[1]).value() as f64
    })
}

/// `μ`-average of the hemisphere observable `sgn(v·λ)` on the circle `τ`.
pub fn crypto_local_average(v: &UnitVec3, tau: f64) -> f64 {
    great_circle_average(tau, std::slice::from_ref(v), |s| s[0].value() as f64)
}

/// `(f(a, τ), g(b, τ))`: the `μ`-averages of Alice's and Bob's outcomes for the
/// setting pair `(a, b)`.
pub fn local_averages(a: &UnitVec3, b: &UnitVec3, tau: f64) -> (f64, f64) {
    let pair = rotated_settings(a, b);
    let f = crypto_local_average(&pair.a_hat, tau);
    let g = -crypto_local_average(&pair.b_hat, tau);
    (f, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::SphereSampler;
    use std::f64::consts::{FRAC_PI_4, SQRT_2};

    /// Midpoint Riemann sum of the same average.
    fn riemann<F: Fn(&UnitVec3) -> f64>(tau: f64, nodes: usize, g: F) -> f64 {
        let h = TAU / nodes as f64;
        let (st, ct) = tau.sin_cos();
        (0..nodes)
            .map(|k| {
                let mu = (k as f64 + 0.5) * h;
                let (sm, cm) = mu.sin_cos();
                let l = UnitVec3::new(sm * ct, sm * st, cm).unwrap();
                g(&l) * sm.abs() * h
            })
            .sum::<f64>()
            / 4.0
    }

    fn pair_at(alpha: f64) -> (UnitVec3, UnitVec3) {
        (UnitVec3::in_xz_plane(alpha), UnitVec3::in_xz_plane(-alpha))
    }

    #[test]
    fn normalization() {
        assert_eq!(great_circle_average(0.3, &[], |_| 1.0), 1.0);
        let v = UnitVec3::from_spherical(1.0, 2.0);
        let w = great_circle_average(2.2, &[v], |_| 1.0);
        assert!((w - 1.0).abs() < 1e-15);
    }

    #[test]
    fn quarter_turn_pair_at_tau_zero() {
        let (a, b) = pair_at(FRAC_PI_4);
        let e = conditional_correlation(&a, &b, 0.0);
        assert!((e - (SQRT_2 - 1.0)).abs() < 1e-14, "{e}");
    }

    #[test]
    fn quarter_turn_pair_at_tau_half_pi() {
        let (a, b) = pair_at(FRAC_PI_4);
        let e = conditional_correlation(&a, &b, FRAC_PI_2);
        assert!((e + 1.0).abs() < 1e-14);
    }

    #[test]
    fn equal_settings() {
        let a = UnitVec3::from_spherical(0.7, 0.2);
        for tau in [0.0, 0.4, 1.5, 3.0] {
            assert!((conditional_correlation(&a, &a, tau) + 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn local_average_vanishes() {
        assert!(crypto_local_average(&UnitVec3::Z, 1.0).abs() < 1e-15);
        let mut s = SphereSampler::new(99);
        for k in 0..100 {
            let a = s.next_direction();
            let b = s.next_direction();
            let tau = PI * (k as f64 + 0.37) / 100.0;
            assert!(crypto_local_average(&a, tau).abs() < 1e-12);
            let (f, g) = local_averages(&a, &b, tau);
            assert!(f.abs() < 1e-12 && g.abs() < 1e-12);
            // the antipodal setting gives the negated average
            assert!((crypto_local_average(&-a, tau) + crypto_local_average(&a, tau)).abs() < 1e-12);
        }
    }

    #[test]
    fn orthogonal_vector_reads_plus() {
        // v = y-axis is orthogonal to the τ = 0 circle
        let v = UnitVec3::Y;
        assert_eq!(crypto_local_average(&v, 0.0), 1.0);
    }

    #[test]
    fn agrees_with_riemann_sum() {
        let mut s = SphereSampler::new(4);
        for k in 0..20 {
            let a = s.next_direction();
            let b = s.next_direction();
            let tau = PI * (k as f64 + 0.5) / 20.0;
            let pair = rotated_settings(&a, &b);
            let exact = conditional_correlation(&a, &b, tau);
            let approx = riemann(tau, 100_000, |l| {
                let (x, y) = pair.outcomes(l);
                (x * y).value() as f64
            });
            assert!((exact - approx).abs() < 1e-4, "{exact} vs {approx}");
            assert!(exact.abs() <= 1.0 + 1e-15);
        }
    }
}
