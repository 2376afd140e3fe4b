//! Seeded random source shared by every generator.
//!
//! The stream is ChaCha with 8 rounds (`rand_chacha::ChaCha8Rng`) keyed by
//! a 64-bit seed through `SeedableRng::seed_from_u64`. Integer ranges use
//! `rand` 0.8's uniform sampler, so equal seeds reproduce byte-identical
//! graphs as long as those two crate versions are pinned.

use rand::distributions::{Distribution, WeightedIndex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Name written to run metadata so outputs can be tied to the generator.
pub const RNG_IDENTITY: &str =
    "ChaCha8Rng (rand_chacha 0.3) via seed_from_u64; rand 0.8 uniform sampling";

#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform integer in `[0, n)`. Panics when `n == 0`.
    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// Uniform real in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    /// Index chosen with probability proportional to `weights[i]`.
    /// Returns `None` when every weight is zero or any weight is invalid.
    pub fn weighted_index(&mut self, weights: &[f64]) -> Option<usize> {
        let dist = WeightedIndex::new(weights).ok()?;
        Some(dist.sample(&mut self.rng))
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        items.shuffle(&mut self.rng);
    }

    /// Moves `k` uniformly chosen elements (without replacement) to the
    /// front of `items` and truncates to them.
    pub fn sample_without_replacement<T>(&mut self, items: &mut Vec<T>, k: usize) {
        let k = k.min(items.len());
        items.partial_shuffle(&mut self.rng, k);
        // rand 0.8 leaves the chosen elements in the tail
        items.drain(..items.len() - k);
    }
}

/// splitmix64 finalizer; used to derive independent stream seeds.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stable combination of a sequence of words into one seed.
pub fn derive_seed(words: &[u64]) -> u64 {
    words
        .iter()
        .fold(0x5EED_5EED_5EED_5EEDu64, |acc, &w| mix64(acc ^ mix64(w)))
}
