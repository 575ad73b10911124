//! Seed derivation for reproducible trial matrices.
//!
//! Every run owns a ChaCha12 stream seeded by a sub-seed that is a pure
//! function of `(master_seed, algorithm id, function id, trial index)`, so
//! results are independent of worker count and scheduling order.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a(hash: u64, bytes: &[u8]) -> u64 {
    bytes
        .iter()
        .fold(hash, |h, &b| (h ^ u64::from(b)).wrapping_mul(FNV_PRIME))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Sub-seed scheme: FNV-1a over `algorithm 0x1f function 0x1f trial_le`,
/// XORed into the master seed and finalized with SplitMix64.
pub fn sub_seed(master_seed: u64, algorithm: &str, function: &str, trial: u32) -> u64 {
    let mut h = fnv1a(FNV_OFFSET, algorithm.as_bytes());
    h = fnv1a(h, &[0x1f]);
    h = fnv1a(h, function.as_bytes());
    h = fnv1a(h, &[0x1f]);
    h = fnv1a(h, &trial.to_le_bytes());
    splitmix64(master_seed ^ h)
}

/// A fresh deterministic stream for the given seed.
pub fn stream(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}
