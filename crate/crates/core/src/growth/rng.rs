//! Seeded, platform-stable randomness for the growth process.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// ChaCha8 seeded through `seed_from_u64`, with a uniform-index method based
/// on rejection sampling so that no index is favoured by modulo bias.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableRng(ChaCha8Rng);

impl StableRng {
    pub fn from_seed(seed: u64) -> Self {
        StableRng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `0..n`. Draws are rejected when they fall in the
    /// last, incomplete block of `n` values. Panics if `n == 0`.
    pub fn uniform_index(&mut self, n: usize) -> usize {
        assert!(n > 0, "uniform_index over an empty range");
        let n = n as u64;
        // 2^64 mod n
        let rem = (u64::MAX % n + 1) % n;
        loop {
            let x = self.next_u64();
            if rem == 0 || x <= u64::MAX - rem {
                return (x % n) as usize;
            }
        }
    }
}
