//! Per-run seed derivation.

use bro_core::problems::FunctionId;
use bro_core::Algorithm;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a(mut hash: u64, bytes: &[u8]) -> u64 {
    for b in bytes {
        hash ^= u64::from(*b);
        hash = hash.wrapping_mul(FNV_PRIME);
    }
    hash
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of run `run_index` for one (algorithm, function) pair.
///
/// Depends only on its four inputs, so adding functions or algorithms to an
/// experiment leaves every other run's seed unchanged.
pub fn run_seed(master_seed: u64, algorithm: Algorithm, function: FunctionId, run_index: usize) -> u64 {
    let mut h = fnv1a(FNV_OFFSET, &master_seed.to_le_bytes());
    h = fnv1a(h, algorithm.name().as_bytes());
    h = fnv1a(h, &(function.number() as u64).to_le_bytes());
    h = fnv1a(h, &(run_index as u64).to_le_bytes());
    splitmix64(h)
}
