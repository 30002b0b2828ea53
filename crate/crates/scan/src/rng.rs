//! Seeded uniform draws.
//!
//! The generator is SplitMix64 with its 64-bit state set to the seed itself:
//! each draw adds `0x9E3779B97F4A7C15` to the state and mixes it with
//! `z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB; z ^ (z >> 31)`.
//! A uniform in `[0, 1)` is `(next >> 11) * 2^-53`. Any language can replay a
//! sweep from its seed with these few lines.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

pub struct UniformSource(SplitMix64);

impl UniformSource {
    pub fn new(seed: u64) -> Self {
        Self(SplitMix64::from_seed(seed.to_le_bytes()))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`.
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }
}
