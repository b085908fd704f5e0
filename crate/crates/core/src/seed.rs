//! Reproducible randomness: a root seed from `APERY_SEED`, and per-task
//! seeds derived from it and a generator tuple.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub const SEED_VAR: &str = "APERY_SEED";

/// Reads `APERY_SEED` (decimal, default 0).
pub fn root_seed() -> Result<u64> {
    match std::env::var(SEED_VAR) {
        Ok(s) => parse_seed(&s),
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(e) => Err(Error::InvalidSeed(e.to_string())),
    }
}

pub fn parse_seed(s: &str) -> Result<u64> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidSeed(s.to_string()))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for the task keyed by `gens`; independent of scheduling order.
pub fn task_seed(root: u64, gens: &[u64]) -> u64 {
    gens.iter()
        .fold(splitmix64(root), |acc, &g| splitmix64(acc ^ g))
}

pub fn task_rng(root: u64, gens: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(task_seed(root, gens))
}
