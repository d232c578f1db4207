//! Decomposition of Hermitian observables into commuting `Ω_N` operators and
//! the kernel/two-plane split of an `Ω_N` operator.

use nalgebra::DVector;

use crate::error::{Error, Result};

use super::basis::HERMITIAN_TOLERANCE;
use super::matrix::{check_square, hermiticity_deviation, outer, ComplexMatrix, C64};

/// Distance allowed between an eigenvalue and its nominal value in `{-1, 0, 1}`.
pub const SPECTRUM_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionTerm {
    pub coefficient: f64,
    /// `|e_j⟩⟨e_j| - |e_{j+1}⟩⟨e_{j+1}|`, spectrum `Ω_N`.
    pub operator: ComplexMatrix,
}

/// `A = α₀ Î + Σ_j α_j Â(a_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub alpha0: f64,
    pub terms: Vec<DecompositionTerm>,
}

impl Decomposition {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.terms.first().map_or(1, |t| t.operator.nrows());
        let mut m = ComplexMatrix::identity(n, n).scale(self.alpha0);
        for t in &self.terms {
            m += t.operator.scale(t.coefficient);
        }
        m
    }
}

fn check_hermitian(a: &ComplexMatrix) -> Result<usize> {
    let n = check_square(a)?;
    let dev = hermiticity_deviation(a);
    if dev > HERMITIAN_TOLERANCE {
        return Err(Error::NotHermitian(dev));
    }
    Ok(n)
}

/// Eigenpairs sorted by decreasing eigenvalue.
fn sorted_eigen(a: &ComplexMatrix) -> Vec<(f64, DVector<C64>)> {
    let eig = a.clone().symmetric_eigen();
    let mut pairs: Vec<(f64, DVector<C64>)> = eig
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(k, &l)| (l, eig.eigenvectors.column(k).into_owned()))
        .collect();
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));
    pairs
}

/// Difference-of-projectors chain in the eigenbasis of `A`.
///
/// With eigenvalues `λ_1 ≥ … ≥ λ_N` and projectors `P_k`, the coefficients
/// solve `α_k - α_{k-1} = λ_k - α₀` with `α₀ = Tr A / N` and `α_0 = α_N = 0`.
pub fn decompose_observable(a: &ComplexMatrix) -> Result<Decomposition> {
    let n = check_hermitian(a)?;
    let alpha0 = a.trace().re / n as f64;
    let pairs = sorted_eigen(a);
    let projectors: Vec<ComplexMatrix> = pairs.iter().map(|(_, v)| outer(v, v)).collect();
    let mut c = 0.0;
    let terms = (0..n - 1)
        .map(|j| {
            c += pairs[j].0 - alpha0;
            DecompositionTerm {
                coefficient: c,
                operator: &projectors[j] - &projectors[j + 1],
            }
        })
        .collect();
    Ok(Decomposition { alpha0, terms })
}

/// Kernel `K` and two-plane `L` of an `Ω_N` operator, with the restriction
/// `Â|_L = ã·σ̂` in a fixed orthonormal frame `(u₁, u₂)` of `L`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelSplit {
    pub k_projector: ComplexMatrix,
    pub l_projector: ComplexMatrix,
    /// `N × 2` isometry with columns `u₁, u₂`.
    pub frame: ComplexMatrix,
    pub a_tilde: [f64; 3],
}

impl KernelSplit {
    pub fn kernel_dimension(&self) -> usize {
        self.k_projector.trace().re.round() as usize
    }
}

fn check_omega_spectrum(values: &[f64]) -> Result<()> {
    let n = values.len();
    let near = |x: f64, t: f64| (x - t).abs() < SPECTRUM_TOLERANCE;
    let plus = values.iter().filter(|&&x| near(x, 1.0)).count();
    let minus = values.iter().filter(|&&x| near(x, -1.0)).count();
    let zero = values.iter().filter(|&&x| near(x, 0.0)).count();
    if plus == 1 && minus == 1 && zero == n - 2 {
        Ok(())
    } else {
        Err(Error::Spectrum(format!(
            "expected one +1, one -1 and {} zeros, found {values:?}",
            n - 2
        )))
    }
}

/// The frame is built from the standard basis: `u₁` normalizes the first
/// `P_L e_k` with `‖P_L e_k‖² ≥ 1/N`, and `u₂` the first Gram-Schmidt residual
/// `P_L e_k - u₁⟨u₁|P_L e_k⟩` with squared norm `≥ 1/(2N)`. Both thresholds
/// are always met because `Tr P_L = 2`.
pub fn kernel_split(a: &ComplexMatrix) -> Result<KernelSplit> {
    let n = check_hermitian(a)?;
    let pairs = sorted_eigen(a);
    let values: Vec<f64> = pairs.iter().map(|p| p.0).collect();
    check_omega_spectrum(&values)?;
    let l_projector = outer(&pairs[0].1, &pairs[0].1) + outer(&pairs[n - 1].1, &pairs[n - 1].1);
    let k_projector = ComplexMatrix::identity(n, n) - &l_projector;
    let column = |k: usize| l_projector.column(k).into_owned();

    let nf = n as f64;
    let u1 = (0..n)
        .map(column)
        .find(|v| v.norm_squared() >= 1.0 / nf)
        .expect("Tr P_L = 2 bounds the largest column");
    let u1 = u1.normalize();
    let u2 = (0..n)
        .map(|k| {
            let v = column(k);
            let p = u1.dotc(&v);
            v - &u1 * p
        })
        .find(|r| r.norm_squared() >= 0.5 / nf)
        .expect("Tr(P_L - u₁u₁†) = 1 bounds the largest residual");
    let u2 = u2.normalize();
    let frame = ComplexMatrix::from_columns(&[u1, u2]);
    let m = frame.adjoint() * a * &frame;
    let a_tilde = [m[(1, 0)].re, m[(1, 0)].im, m[(0, 0)].re];
    Ok(KernelSplit {
        k_projector,
        l_projector,
        frame,
        a_tilde,
    })
}
