//! Singlet correlations from one PR box and two hidden unit vectors.
//!
//! Each round draws `λ₁, λ₂` uniformly on the sphere and forms the
//! unnormalized `λ± = λ₁ ± λ₂`. With `s(·) ∈ {-1, +1}` and `sgn(0) = +1`,
//! the box inputs are
//!
//! ```text
//! x = (s(a·λ₁) + s(a·λ₂))/2 + 1   y = (s(b·λ₊) + s(b·λ₋))/2 + 1   (mod 2)
//! ```
//!
//! and, with `(p, q)` the box outputs, the measured bits are
//!
//! ```text
//! A = p + (s(a·λ₁) + 1)/2          B = q + (s(b·λ₊) - 1)/2          (mod 2)
//! ```
//!
//! The box's own hidden bit is a fresh fair coin each round.

use rayon::prelude::*;
use serde::Serialize;

use crate::correlation::SignOutcome;
use crate::error::{Error, Result};
use crate::geometry::UnitVec3;
use crate::pr_box::pr_hidden_outputs;
use crate::sampling::{batches, Estimate, SphereSampler};

/// `sgn` with range `{-1, +1}` and `sgn(0) = +1`.
pub fn sgn(r: f64) -> SignOutcome {
    SignOutcome::of(r)
}

/// Bit that is 1 when `sgn(r) = +1`, i.e. `(sgn(r) + 1)/2`.
fn positive_bit(r: f64) -> u8 {
    (sgn(r) == SignOutcome::Plus) as u8
}

/// Readings of the output formulas.
///
/// `Declared` is the form documented at module level. `SwappedCorrections`
/// exchanges the `+1`/`-1` offsets of the two output corrections.
/// `ZeroOneRange` is the `{0, 1}`-valued sign with XOR combination
/// (`B = q ⊕ [b·λ₊ ≥ 0]`), and `ZeroOneSwapped` complements both of its
/// corrections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CerfConvention {
    Declared,
    SwappedCorrections,
    ZeroOneRange,
    ZeroOneSwapped,
}

impl CerfConvention {
    pub const ALL: [CerfConvention; 4] = [
        CerfConvention::Declared,
        CerfConvention::SwappedCorrections,
        CerfConvention::ZeroOneRange,
        CerfConvention::ZeroOneSwapped,
    ];

    /// Conventions differing only by flipping both outputs share a family;
    /// they produce identical correlations.
    pub fn family(self) -> u8 {
        match self {
            CerfConvention::Declared | CerfConvention::SwappedCorrections => 0,
            CerfConvention::ZeroOneRange | CerfConvention::ZeroOneSwapped => 1,
        }
    }

    /// XOR masks applied to `(A, B)` relative to the `ZeroOneRange` reading.
    fn output_flips(self) -> (u8, u8) {
        match self {
            CerfConvention::Declared => (0, 1),
            CerfConvention::SwappedCorrections => (1, 0),
            CerfConvention::ZeroOneRange => (0, 0),
            CerfConvention::ZeroOneSwapped => (1, 1),
        }
    }
}

/// Everything one round produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CerfRound {
    /// Box inputs.
    pub x: u8,
    pub y: u8,
    /// Box outputs.
    pub box_a: u8,
    pub box_b: u8,
    /// Measured bits.
    pub alice: u8,
    pub bob: u8,
}

impl CerfRound {
    /// Product of the sign-mapped outputs.
    pub fn sign_product(&self) -> i8 {
        (SignOutcome::from_bit(self.alice) * SignOutcome::from_bit(self.bob)).value()
    }
}

/// One round under the declared convention with the box's hidden bit given.
pub fn cerf_round(
    a: &UnitVec3,
    b: &UnitVec3,
    lambda1: &UnitVec3,
    lambda2: &UnitVec3,
    box_bit: u8,
) -> CerfRound {
    cerf_round_with(CerfConvention::Declared, a, b, lambda1, lambda2, box_bit)
}

pub fn cerf_round_with(
    convention: CerfConvention,
    a: &UnitVec3,
    b: &UnitVec3,
    lambda1: &UnitVec3,
    lambda2: &UnitVec3,
    box_bit: u8,
) -> CerfRound {
    let l1 = lambda1.to_array();
    let l2 = lambda2.to_array();
    let plus = [l1[0] + l2[0], l1[1] + l2[1], l1[2] + l2[2]];
    let minus = [l1[0] - l2[0], l1[1] - l2[1], l1[2] - l2[2]];

    let s_a1 = positive_bit(a.dot_raw(l1));
    let s_a2 = positive_bit(a.dot_raw(l2));
    let s_bp = positive_bit(b.dot_raw(plus));
    let s_bm = positive_bit(b.dot_raw(minus));

    // (s + s')/2 + 1 is even exactly when the two signs agree
    let x = s_a1 ^ s_a2;
    let y = s_bp ^ s_bm;
    let (box_a, box_b) = pr_hidden_outputs(x, y, box_bit);

    let (flip_a, flip_b) = convention.output_flips();
    CerfRound {
        x,
        y,
        box_a,
        box_b,
        alice: box_a ^ s_a1 ^ flip_a,
        bob: box_b ^ s_bp ^ flip_b,
    }
}

/// Result of a batched singlet simulation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SingletEstimate {
    pub estimate: Estimate,
    /// Fraction of rounds with `A = 0`.
    pub alice_zero: f64,
    /// Fraction of rounds with `B = 0`.
    pub bob_zero: f64,
}

#[derive(Default)]
struct Tally {
    sign_sum: i64,
    alice_zero: u64,
    bob_zero: u64,
}

/// Estimates `E(a, b)` from `n` independent rounds under the declared convention.
pub fn estimate_singlet_correlation(
    a: &UnitVec3,
    b: &UnitVec3,
    n: u64,
    seed: u64,
) -> Result<SingletEstimate> {
    estimate_singlet_correlation_with(CerfConvention::Declared, a, b, n, seed)
}

/// Batch `k` draws from the substream `(seed, "singlet", k)`, so the result
/// is bit-identical for any number of worker threads.
pub fn estimate_singlet_correlation_with(
    convention: CerfConvention,
    a: &UnitVec3,
    b: &UnitVec3,
    n: u64,
    seed: u64,
) -> Result<SingletEstimate> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "sample count must be at least 1".into(),
        ));
    }
    let tallies: Vec<Tally> = batches(n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(k, len)| {
            let mut sampler = SphereSampler::substream(seed, "singlet", k);
            let mut t = Tally::default();
            for _ in 0..len {
                let l1 = sampler.next_direction();
                let l2 = sampler.next_direction();
                let bit = sampler.next_bit();
                let round = cerf_round_with(convention, a, b, &l1, &l2, bit);
                t.sign_sum += round.sign_product() as i64;
                t.alice_zero += (round.alice == 0) as u64;
                t.bob_zero += (round.bob == 0) as u64;
            }
            t
        })
        .collect();
    let total = tallies.into_iter().fold(Tally::default(), |acc, t| Tally {
        sign_sum: acc.sign_sum + t.sign_sum,
        alice_zero: acc.alice_zero + t.alice_zero,
        bob_zero: acc.bob_zero + t.bob_zero,
    });
    Ok(SingletEstimate {
        estimate: Estimate::from_sign_sum(n, total.sign_sum),
        alice_zero: total.alice_zero as f64 / n as f64,
        bob_zero: total.bob_zero as f64 / n as f64,
    })
}

/// Seeded random measurement-direction pairs, drawn from substream
/// `(seed, "pairs", 0)`.
pub fn random_direction_pairs(seed: u64, count: usize) -> Vec<(UnitVec3, UnitVec3)> {
    let mut sampler = SphereSampler::substream(seed, "pairs", 0);
    (0..count)
        .map(|_| (sampler.next_direction(), sampler.next_direction()))
        .collect()
}

/// Summary record for one simulated direction pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SingletSummary {
    pub a: UnitVec3,
    pub b: UnitVec3,
    pub n: u64,
    pub seed: u64,
    pub e_hat: f64,
    pub stderr: f64,
    /// Singlet prediction `-a·b`.
    pub quantum_reference: f64,
}

impl SingletSummary {
    pub fn simulate(a: UnitVec3, b: UnitVec3, n: u64, seed: u64) -> Result<Self> {
        let r = estimate_singlet_correlation(&a, &b, n, seed)?;
        Ok(SingletSummary {
            a,
            b,
            n,
            seed,
            e_hat: r.estimate.mean,
            stderr: r.estimate.stderr,
            quantum_reference: -a.dot(&b),
        })
    }

    /// `|ê - (-a·b)| < k·stderr`.
    pub fn within_sigmas(&self, k: f64) -> bool {
        (self.e_hat - self.quantum_reference).abs() < k * self.stderr
    }
}
