//! The shared randomness of both model versions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The two old vertices chosen at one step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Picks {
    /// Vertex whose neighbourhood the new vertex copies.
    pub duplicate: usize,
    /// Vertex whose edges are erased.
    pub delete: usize,
}

impl Picks {
    pub const fn new(duplicate: usize, delete: usize) -> Self {
        Self { duplicate, delete }
    }
}

/// Seeded, replayable sequence of [`Picks`].
///
/// At step `n` (1-based) there are `n` old vertices and both picks are drawn
/// independently and uniformly from `0..n`.
#[derive(Debug, Clone)]
pub struct ChoiceStream {
    seed: u64,
    step: usize,
    rng: ChaCha8Rng,
}

impl ChoiceStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            step: 0,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of steps drawn so far.
    pub fn step(&self) -> usize {
        self.step
    }

    pub fn next_picks(&mut self) -> Picks {
        self.step += 1;
        let old = self.step as u64;
        let duplicate = self.rng.random_range(0..old) as usize;
        let delete = self.rng.random_range(0..old) as usize;
        Picks { duplicate, delete }
    }
}

impl Iterator for ChoiceStream {
    type Item = Picks;

    fn next(&mut self) -> Option<Picks> {
        Some(self.next_picks())
    }
}
