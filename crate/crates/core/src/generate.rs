//! Seeded random tournaments.
//!
//! The generator is ChaCha8 seeded with `seed_from_u64(seed)`. Pairs
//! `(i, j)` with `i < j` are visited row by row and each draws one `bool`;
//! `true` orients the arc `i -> j`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Tournament;

pub fn generate(n: usize, seed: u64) -> Tournament {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Tournament::from_fn(n, |_, _| rng.random())
}
