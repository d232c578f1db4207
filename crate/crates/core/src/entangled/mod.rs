//! Maximally entangled states of two `N`-level systems and the operator
//! algebra used to bound the local part of crypto-nonlocal models.
//!
//! States are stored as amplitude vectors over the product basis
//! `|v_i⟩ ⊗ |w_j⟩` at index `i·N + j`. Operators are dense
//! `N × N` complex matrices. For `|ψ⟩ = N^{-1/2} Σ_i |v_i⟩|w_i⟩`,
//! `⟨ψ|X ⊗ Y|ψ⟩ = Tr(X Yᵀ)/N`, so the basis `F̂` below is orthonormal for
//! the pairing `⟨ψ|F̂_r ⊗ Ĝ_s|ψ⟩` with `Ĝ = F̂ᵀ`.

mod basis;
mod curve;
mod decompose;
mod matrix;
mod state;
mod verify;

pub use basis::{
    joint_expectation, operator_basis, square_expectation, BasisLabel, ObservableVector,
    OperatorBasis,
};
pub use curve::{
    curve_partition, curve_point, malus_reference, theorem_bound, Curve, CurvePartition,
};
pub use decompose::{
    decompose_observable, kernel_split, Decomposition, DecompositionTerm, KernelSplit,
};
pub use matrix::{
    commutator_norm, hermiticity_deviation, max_abs, random_hermitian, random_omega_observable,
    random_unitary, unitarity_deviation, ComplexMatrix, C64,
};
pub use state::{make_schmidt_state, transpose_partner, transpose_residual, SchmidtState};
pub use verify::{
    verify_theorem_machinery, BoundReport, DimensionReport, ResidualCheck, TheoremReport,
    MAX_DIMENSION,
};
