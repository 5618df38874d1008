//! Seeded randomness. Every randomized operation in this crate takes an
//! explicit `u64` seed and uses ChaCha8, which is stable across platforms and
//! releases; independent substreams are split off via the ChaCha stream id.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Root generator for a seed.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent substream `stream` of the generator for `seed`; replications
/// across streams can run in parallel without sharing state.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
