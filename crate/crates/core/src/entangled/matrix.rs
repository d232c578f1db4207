//! Dense complex matrix helpers.

use nalgebra::{Complex, DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

pub type C64 = Complex<f64>;
pub type ComplexMatrix = DMatrix<C64>;

/// Largest entry modulus.
pub fn max_abs(m: &ComplexMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `max |M - M†|`.
pub fn hermiticity_deviation(m: &ComplexMatrix) -> f64 {
    max_abs(&(m - m.adjoint()))
}

/// `max |U†U - I|`.
pub fn unitarity_deviation(u: &ComplexMatrix) -> f64 {
    let n = u.ncols();
    max_abs(&(u.adjoint() * u - ComplexMatrix::identity(n, n)))
}

/// `max |XY - YX|`.
pub fn commutator_norm(x: &ComplexMatrix, y: &ComplexMatrix) -> f64 {
    max_abs(&(x * y - y * x))
}

pub(crate) fn outer(u: &DVector<C64>, v: &DVector<C64>) -> ComplexMatrix {
    u * v.adjoint()
}

pub(crate) fn check_square(m: &ComplexMatrix) -> crate::Result<usize> {
    if m.nrows() != m.ncols() {
        return Err(crate::Error::DimensionMismatch {
            expected: m.nrows(),
            found: m.ncols(),
        });
    }
    Ok(m.nrows())
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// `(G + G†)/2` with i.i.d. complex Gaussian `G`.
pub fn random_hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(n, n, |_, _| gaussian(rng));
    (&g + g.adjoint()).scale(0.5)
}

/// Gram-Schmidt orthonormalization of complex Gaussian columns.
pub fn random_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let mut cols: Vec<DVector<C64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v = DVector::from_fn(n, |_, _| gaussian(rng));
        for _ in 0..2 {
            for c in &cols {
                let p = c.dotc(&v);
                v -= c * p;
            }
        }
        let norm = v.norm();
        if norm > 1e-8 {
            cols.push(v.unscale(norm));
        }
    }
    ComplexMatrix::from_columns(&cols)
}

/// `U diag(1, -1, 0, …, 0) U†` with random unitary `U`.
pub fn random_omega_observable<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let u = random_unitary(n, rng);
    let mut d = ComplexMatrix::zeros(n, n);
    d[(0, 0)] = C64::new(1.0, 0.0);
    d[(1, 1)] = C64::new(-1.0, 0.0);
    &u * d * u.adjoint()
}
