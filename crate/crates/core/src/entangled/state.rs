//! Maximally entangled two-party states.

use nalgebra::DVector;

use crate::error::{Error, Result};

use super::matrix::{check_square, ComplexMatrix, C64};

/// `N^{-1/2} Σ_i |v_i⟩ ⊗ |w_i⟩` over the product basis, index `i·N + j`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtState {
    n: usize,
    amplitudes: DVector<C64>,
}

pub fn make_schmidt_state(n: usize) -> Result<SchmidtState> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "dimension {n} must be at least 2"
        )));
    }
    let c = (n as f64).recip().sqrt();
    let mut amplitudes = DVector::zeros(n * n);
    for i in 0..n {
        amplitudes[i * n + i] = C64::new(c, 0.0);
    }
    Ok(SchmidtState { n, amplitudes })
}

impl SchmidtState {
    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    /// Partial trace over the second party.
    pub fn reduced_density(&self) -> ComplexMatrix {
        let n = self.n;
        ComplexMatrix::from_fn(n, n, |i, k| {
            (0..n)
                .map(|j| self.amplitudes[i * n + j] * self.amplitudes[k * n + j].conj())
                .sum()
        })
    }

    fn check(&self, m: &ComplexMatrix) -> Result<()> {
        let d = check_square(m)?;
        if d != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: d,
            });
        }
        Ok(())
    }

    /// `(X ⊗ Y)|ψ⟩`.
    pub fn apply(&self, x: &ComplexMatrix, y: &ComplexMatrix) -> Result<DVector<C64>> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.kronecker(y) * &self.amplitudes)
    }

    /// `⟨ψ|X ⊗ Y|ψ⟩`, computed densely.
    pub fn expectation(&self, x: &ComplexMatrix, y: &ComplexMatrix) -> Result<C64> {
        Ok(self.amplitudes.dotc(&self.apply(x, y)?))
    }

    pub fn identity(&self) -> ComplexMatrix {
        ComplexMatrix::identity(self.n, self.n)
    }
}

/// The operator `X̂ᵀ` on the second party with `(X̂ ⊗ Î)|ψ⟩ = (Î ⊗ X̂ᵀ)|ψ⟩`.
pub fn transpose_partner(x: &ComplexMatrix) -> ComplexMatrix {
    x.transpose()
}

/// `‖(X̂ ⊗ Î - Î ⊗ X̂ᵀ)|ψ⟩‖`.
pub fn transpose_residual(state: &SchmidtState, x: &ComplexMatrix) -> Result<f64> {
    let id = state.identity();
    let lhs = state.apply(x, &id)?;
    let rhs = state.apply(&id, &transpose_partner(x))?;
    Ok((lhs - rhs).norm())
}
