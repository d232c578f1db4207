//! The planar curve from `a` to `-a` through `Ω_N` observables, its
//! partition, and the resulting bound on the local average.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::UnitVec3;

use super::basis::{ObservableVector, OperatorBasis};
use super::decompose::{kernel_split, KernelSplit};
use super::matrix::{ComplexMatrix, C64};

/// Curve `θ ↦ a(θ)` with `Â(a(θ)) = V̂_θ Â(a) V̂_θ†`, `V̂_θ = P_K + W Û_θ W†`,
/// `Û_θ = cos(θ/2) Î + i sin(θ/2) c̃·σ̂` in the frame `W` of `L`.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    base: ObservableVector,
    operator: ComplexMatrix,
    split: KernelSplit,
    c_tilde: [f64; 3],
}

/// First axis in `x, y, z` order whose component orthogonal to `ã` has norm
/// above `1/2`, normalized.
fn orthogonal_axis(a: &[f64; 3]) -> [f64; 3] {
    for k in 0..3 {
        let mut e = [0.0; 3];
        e[k] = 1.0;
        let p = a[k];
        let r = [e[0] - p * a[0], e[1] - p * a[1], e[2] - p * a[2]];
        let norm = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
        if norm > 0.5 {
            return r.map(|x| x / norm);
        }
    }
    unreachable!("a unit vector leaves a residual above 1/2 on some axis")
}

fn pauli_combination(c: &[f64; 3]) -> ComplexMatrix {
    ComplexMatrix::from_row_slice(
        2,
        2,
        &[
            C64::new(c[2], 0.0),
            C64::new(c[0], -c[1]),
            C64::new(c[0], c[1]),
            C64::new(-c[2], 0.0),
        ],
    )
}

impl Curve {
    /// Requires `Â(a)` to have spectrum `Ω_N`.
    pub fn new(a: &ObservableVector, basis: &OperatorBasis) -> Result<Curve> {
        let operator = a.alice_operator(basis)?;
        let split = kernel_split(&operator)?;
        let c_tilde = orthogonal_axis(&split.a_tilde);
        Ok(Curve {
            base: a.clone(),
            operator,
            split,
            c_tilde,
        })
    }

    pub fn base(&self) -> &ObservableVector {
        &self.base
    }

    pub fn split(&self) -> &KernelSplit {
        &self.split
    }

    pub fn c_tilde(&self) -> [f64; 3] {
        self.c_tilde
    }

    /// `V̂_θ`.
    pub fn unitary(&self, theta: f64) -> ComplexMatrix {
        let (s, c) = (0.5 * theta).sin_cos();
        let u = ComplexMatrix::identity(2, 2).scale(c)
            + pauli_combination(&self.c_tilde) * C64::new(0.0, s);
        let w = &self.split.frame;
        &self.split.k_projector + w * u * w.adjoint()
    }

    /// `Â(a(θ))`.
    pub fn operator_at(&self, theta: f64) -> ComplexMatrix {
        let v = self.unitary(theta);
        &v * &self.operator * v.adjoint()
    }

    /// `a(θ)`, for `θ ∈ [0, π]`.
    pub fn point(&self, theta: f64, basis: &OperatorBasis) -> Result<ObservableVector> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::InvalidArgument(format!(
                "theta = {theta} outside [0, π]"
            )));
        }
        let m = self.operator_at(theta);
        // conjugation preserves Hermiticity only up to rounding
        let m = (&m + m.adjoint()).scale(0.5);
        ObservableVector::from_operator(basis, &m)
    }
}

pub fn curve_point(
    a: &ObservableVector,
    theta: f64,
    basis: &OperatorBasis,
) -> Result<ObservableVector> {
    Curve::new(a, basis)?.point(theta, basis)
}

/// Nodes `a_j = a(jπ/n)`, `j = 0, …, n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvePartition {
    pub dimension: usize,
    pub n: usize,
    pub base: ObservableVector,
    pub nodes: Vec<ObservableVector>,
}

pub fn curve_partition(
    a: &ObservableVector,
    n: usize,
    basis: &OperatorBasis,
) -> Result<CurvePartition> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "partition count must be at least 1".into(),
        ));
    }
    let curve = Curve::new(a, basis)?;
    let nodes = (0..=n)
        .map(|j| {
            if j == 0 {
                Ok(a.clone())
            } else {
                curve.point(PI * j as f64 / n as f64, basis)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CurvePartition {
        dimension: a.dimension(),
        n,
        base: a.clone(),
        nodes,
    })
}

impl CurvePartition {
    /// `max |a_n + a|` coordinatewise.
    pub fn endpoint_residual(&self) -> f64 {
        self.nodes[self.n].distance_max(&self.base.scale(-1.0))
    }

    /// `max |‖a_j‖² - ‖a‖²|`.
    pub fn norm_residual(&self) -> f64 {
        let r = self.base.norm_sq();
        self.nodes
            .iter()
            .map(|v| (v.norm_sq() - r).abs())
            .fold(0.0, f64::max)
    }

    /// `max |a_{j+1}·a_j - ‖a‖² cos(π/n)|`.
    pub fn spacing_residual(&self) -> f64 {
        let target = self.base.norm_sq() * (PI / self.n as f64).cos();
        self.nodes
            .windows(2)
            .map(|w| (w[1].dot(&w[0]).expect("same dimension") - target).abs())
            .fold(0.0, f64::max)
    }
}

/// Largest distance of a set of points from `span{p, q}`, with `p ⟂ q`.
pub(crate) fn plane_residual(
    p: &ObservableVector,
    q: &ObservableVector,
    points: &[ObservableVector],
) -> f64 {
    let (pp, qq) = (p.norm_sq(), q.norm_sq());
    points
        .iter()
        .map(|x| {
            let cp = x.dot(p).expect("same dimension") / pp;
            let cq = x.dot(q).expect("same dimension") / qq;
            x.coords()
                .iter()
                .zip(p.coords().iter().zip(q.coords()))
                .map(|(xi, (pi, qi))| (xi - cp * pi - cq * qi).powi(2))
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max)
}

/// `(2 n ‖a‖² / N) sin²(π / 2n)`.
pub fn theorem_bound(n: u64, a_norm_sq: f64, dimension: usize) -> f64 {
    let n = n as f64;
    2.0 * n * a_norm_sq / dimension as f64 * (PI / (2.0 * n)).sin().powi(2)
}

/// `2(u·a)² - 1`.
pub fn malus_reference(a: &UnitVec3, u: &UnitVec3) -> f64 {
    2.0 * a.dot(u).powi(2) - 1.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entangled::basis::operator_basis;
    use crate::entangled::matrix::random_omega_observable;
    use crate::sampling::substream_rng;
    use std::f64::consts::FRAC_PI_2;

    fn random_omega_vector(n: usize, seed: u64) -> (ObservableVector, OperatorBasis) {
        let basis = operator_basis(n).unwrap();
        let mut rng = substream_rng(seed, "curve-test", n as u64);
        let a = random_omega_observable(n, &mut rng);
        (ObservableVector::from_operator(&basis, &a).unwrap(), basis)
    }

    #[test]
    fn endpoints() {
        for n in 2..=6 {
            let (a, basis) = random_omega_vector(n, 1);
            let c = Curve::new(&a, &basis).unwrap();
            assert!(c.point(0.0, &basis).unwrap().distance_max(&a) < 1e-12);
            assert!(c.point(PI, &basis).unwrap().distance_max(&a.scale(-1.0)) < 1e-10);
            assert!(c.point(3.5, &basis).is_err());
        }
    }

    #[test]
    fn spectrum_and_trace_preserved() {
        let (a, basis) = random_omega_vector(4, 2);
        let c = Curve::new(&a, &basis).unwrap();
        for k in 0..=10 {
            let m = c.operator_at(PI * k as f64 / 10.0);
            assert!(m.trace().norm() < 1e-12);
            let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
            ev.sort_by(f64::total_cmp);
            let want = [-1.0, 0.0, 0.0, 1.0];
            assert!(
                ev.iter().zip(want).all(|(x, w)| (x - w).abs() < 1e-10),
                "{ev:?}"
            );
        }
    }

    #[test]
    fn partition_identities() {
        let (a, basis) = random_omega_vector(3, 3);
        let p = curve_partition(&a, 8, &basis).unwrap();
        assert_eq!(p.nodes.len(), 9);
        assert!(p.spacing_residual() < 1e-10);
        assert!(p.norm_residual() < 1e-10);
        assert!(p.endpoint_residual() < 1e-10);
        let p1 = curve_partition(&a, 1, &basis).unwrap();
        let d = p1.nodes[1].dot(&p1.nodes[0]).unwrap();
        assert!((d + a.norm_sq()).abs() < 1e-10);
        assert!(curve_partition(&a, 0, &basis).is_err());
    }

    #[test]
    fn curve_is_planar() {
        let (a, basis) = random_omega_vector(5, 4);
        let c = Curve::new(&a, &basis).unwrap();
        let q = c.point(FRAC_PI_2, &basis).unwrap();
        assert!(q.dot(&a).unwrap().abs() < 1e-10);
        let pts: Vec<_> = (0..=12)
            .map(|k| c.point(PI * k as f64 / 12.0, &basis).unwrap())
            .collect();
        assert!(plane_residual(&a, &q, &pts) < 1e-10);
    }

    #[test]
    fn non_omega_observable_is_rejected() {
        let basis = operator_basis(3).unwrap();
        let mut coords = vec![0.0; 9];
        coords[0] = 1.0;
        let a = ObservableVector::new(3, coords).unwrap();
        assert!(matches!(Curve::new(&a, &basis), Err(Error::Spectrum(_))));
    }

    #[test]
    fn bound_values() {
        assert!((theorem_bound(1, 1.0, 2) - 1.0).abs() < 1e-15);
        let b = theorem_bound(1_000_000, 1.0, 2);
        assert!((b - PI * PI / 4e6).abs() < 1e-12);
        assert!(b < 3e-6);
        for n in 2..1024u64 {
            assert!(theorem_bound(n + 1, 1.0, 2) < theorem_bound(n, 1.0, 2));
        }
    }

    #[test]
    fn malus_values() {
        let a = UnitVec3::Z;
        assert_eq!(malus_reference(&a, &a), 1.0);
        assert_eq!(malus_reference(&a, &UnitVec3::X), -1.0);
        let u = UnitVec3::in_xz_plane(PI / 4.0);
        assert!(malus_reference(&a, &u).abs() < 1e-15);
    }
}
