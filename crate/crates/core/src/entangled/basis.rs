//! State-adapted Hermitian operator basis and observable coordinates.

use serde::Serialize;

use crate::error::{Error, Result};

use super::matrix::{check_square, hermiticity_deviation, ComplexMatrix, C64};
use super::state::SchmidtState;

/// Hermiticity tolerance for operators passed in as observables.
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BasisLabel {
    /// `√N |v_i⟩⟨v_i|`.
    Diagonal(usize),
    /// `√(N/2) (|v_i⟩⟨v_j| + |v_j⟩⟨v_i|)`, `i < j`.
    Symmetric(usize, usize),
    /// `i √(N/2) (|v_i⟩⟨v_j| - |v_j⟩⟨v_i|)`, `i < j`.
    Antisymmetric(usize, usize),
}

/// The `N²` operators `F̂_r`, diagonal ones first, then for each `i < j` the
/// symmetric and antisymmetric pair. Partners are `Ĝ_r = F̂_rᵀ`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorBasis {
    n: usize,
    labels: Vec<BasisLabel>,
    f: Vec<ComplexMatrix>,
}

pub fn operator_basis(n: usize) -> Result<OperatorBasis> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "dimension {n} must be at least 2"
        )));
    }
    let mut labels: Vec<BasisLabel> = (0..n).map(BasisLabel::Diagonal).collect();
    for i in 0..n {
        for j in i + 1..n {
            labels.push(BasisLabel::Symmetric(i, j));
            labels.push(BasisLabel::Antisymmetric(i, j));
        }
    }
    let d = (n as f64).sqrt();
    let h = (n as f64 / 2.0).sqrt();
    let f = labels
        .iter()
        .map(|label| {
            let mut m = ComplexMatrix::zeros(n, n);
            match *label {
                BasisLabel::Diagonal(i) => m[(i, i)] = C64::new(d, 0.0),
                BasisLabel::Symmetric(i, j) => {
                    m[(i, j)] = C64::new(h, 0.0);
                    m[(j, i)] = C64::new(h, 0.0);
                }
                BasisLabel::Antisymmetric(i, j) => {
                    m[(i, j)] = C64::new(0.0, h);
                    m[(j, i)] = C64::new(0.0, -h);
                }
            }
            m
        })
        .collect();
    Ok(OperatorBasis { n, labels, f })
}

impl OperatorBasis {
    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    /// `F̂_r`.
    pub fn f(&self, r: usize) -> &ComplexMatrix {
        &self.f[r]
    }

    /// `Ĝ_r = F̂_rᵀ`.
    pub fn g(&self, r: usize) -> ComplexMatrix {
        self.f[r].transpose()
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.f
    }

    fn combine(&self, coords: &[f64]) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(self.n, self.n);
        for (c, f) in coords.iter().zip(&self.f) {
            m += f.scale(*c);
        }
        m
    }
}

/// Real coordinates of a Hermitian operator over `F̂` (Alice) or `Ĝ` (Bob).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObservableVector {
    n: usize,
    coords: Vec<f64>,
}

impl ObservableVector {
    pub fn new(n: usize, coords: Vec<f64>) -> Result<Self> {
        if coords.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: coords.len(),
            });
        }
        Ok(ObservableVector { n, coords })
    }

    /// `a_r = Tr(F̂_r A)/N`.
    pub fn from_operator(basis: &OperatorBasis, a: &ComplexMatrix) -> Result<Self> {
        let n = check_square(a)?;
        if n != basis.n {
            return Err(Error::DimensionMismatch {
                expected: basis.n,
                found: n,
            });
        }
        let dev = hermiticity_deviation(a);
        if dev > HERMITIAN_TOLERANCE {
            return Err(Error::NotHermitian(dev));
        }
        let coords = basis
            .f
            .iter()
            .map(|f| (f * a).trace().re / n as f64)
            .collect();
        Ok(ObservableVector { n, coords })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// `Â(a) = a·F̂`.
    pub fn alice_operator(&self, basis: &OperatorBasis) -> Result<ComplexMatrix> {
        self.check(basis)?;
        Ok(basis.combine(&self.coords))
    }

    /// `B̂(b) = b·Ĝ = Â(b)ᵀ`.
    pub fn bob_operator(&self, basis: &OperatorBasis) -> Result<ComplexMatrix> {
        Ok(self.alice_operator(basis)?.transpose())
    }

    pub fn dot(&self, other: &ObservableVector) -> Result<f64> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(x, y)| x * y)
            .sum())
    }

    pub fn norm_sq(&self) -> f64 {
        self.coords.iter().map(|x| x * x).sum()
    }

    pub fn scale(&self, s: f64) -> ObservableVector {
        ObservableVector {
            n: self.n,
            coords: self.coords.iter().map(|x| s * x).collect(),
        }
    }

    /// Largest coordinate difference.
    pub fn distance_max(&self, other: &ObservableVector) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    fn check(&self, basis: &OperatorBasis) -> Result<()> {
        if basis.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: basis.n,
            });
        }
        Ok(())
    }
}

fn check_state(state: &SchmidtState, v: &ObservableVector) -> Result<()> {
    if state.dimension() != v.n {
        return Err(Error::DimensionMismatch {
            expected: state.dimension(),
            found: v.n,
        });
    }
    Ok(())
}

/// `⟨ψ|Â(a) ⊗ B̂(b)|ψ⟩`, computed densely.
pub fn joint_expectation(
    a: &ObservableVector,
    b: &ObservableVector,
    state: &SchmidtState,
    basis: &OperatorBasis,
) -> Result<f64> {
    check_state(state, a)?;
    check_state(state, b)?;
    let e = state.expectation(&a.alice_operator(basis)?, &b.bob_operator(basis)?)?;
    Ok(e.re)
}

/// `⟨ψ|Â(a)² ⊗ Î|ψ⟩`, computed densely.
pub fn square_expectation(
    a: &ObservableVector,
    state: &SchmidtState,
    basis: &OperatorBasis,
) -> Result<f64> {
    check_state(state, a)?;
    let op = a.alice_operator(basis)?;
    Ok(state.expectation(&(&op * &op), &state.identity())?.re)
}
