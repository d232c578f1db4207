//! Seeded random streams.
//!
//! Every random quantity in the crate is drawn from a ChaCha8 generator whose
//! seed is derived from a caller-supplied 64-bit seed and a named stream
//! label (plus an optional batch index). The derivation is
//! `splitmix64(seed ^ fnv1a64(label) ^ splitmix64(index))`, so outputs do not
//! depend on worker count or scheduling.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::UnitVec3;

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for the substream `(seed, label, index)`.
pub fn substream_seed(seed: u64, label: &str, index: u64) -> u64 {
    splitmix64(seed ^ fnv1a64(label.as_bytes()) ^ splitmix64(index))
}

/// Generator for the substream `(seed, label, index)`.
pub fn substream_rng(seed: u64, label: &str, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(substream_seed(seed, label, index))
}

/// Uniform directions on the unit sphere: `z` uniform on `[-1, 1]`, azimuth
/// uniform on `[0, 2π)`.
#[derive(Debug, Clone)]
pub struct SphereSampler {
    seed: u64,
    counter: u64,
    rng: ChaCha8Rng,
}

impl SphereSampler {
    pub fn new(seed: u64) -> Self {
        SphereSampler {
            seed,
            counter: 0,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Sampler on a named substream of `seed`.
    pub fn substream(seed: u64, label: &str, index: u64) -> Self {
        SphereSampler::new(substream_seed(seed, label, index))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of directions drawn so far.
    pub fn counter(&self) -> u64 {
        self.counter
    }

    pub fn next_direction(&mut self) -> UnitVec3 {
        self.counter += 1;
        let z: f64 = self.rng.random_range(-1.0..=1.0);
        let phi: f64 = self.rng.random_range(0.0..TAU);
        let r = (1.0 - z * z).max(0.0).sqrt();
        let (s, c) = phi.sin_cos();
        UnitVec3::normalize([r * c, r * s, z]).expect("non-zero by construction")
    }

    /// A fair bit drawn from the same stream.
    pub fn next_bit(&mut self) -> u8 {
        self.rng.random::<bool>() as u8
    }
}

/// Sample mean of `n` values in `{-1, +1}` with its standard error
/// (sample standard deviation over `√n`).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Estimate {
    pub n: u64,
    pub mean: f64,
    pub stderr: f64,
}

impl Estimate {
    /// From the sum of `n` signs.
    pub fn from_sign_sum(n: u64, sum: i64) -> Self {
        assert!(n >= 1, "empty sample");
        let nf = n as f64;
        let mean = sum as f64 / nf;
        let variance = if n > 1 {
            (1.0 - mean * mean).max(0.0) * nf / (nf - 1.0)
        } else {
            0.0
        };
        Estimate {
            n,
            mean,
            stderr: (variance / nf).sqrt(),
        }
    }

    /// `|mean - reference| < max(floor, k·stderr)`.
    pub fn agrees_with(&self, reference: f64, k: f64, floor: f64) -> bool {
        (self.mean - reference).abs() < floor.max(k * self.stderr)
    }
}

/// Number of rounds per independent substream in batched Monte Carlo runs.
pub const BATCH_SIZE: u64 = 1 << 14;

/// Splits `n` rounds into consecutive batches `(index, len)`.
pub fn batches(n: u64) -> impl Iterator<Item = (u64, u64)> {
    let count = n.div_ceil(BATCH_SIZE);
    (0..count).map(move |k| (k, BATCH_SIZE.min(n - k * BATCH_SIZE)))
}
