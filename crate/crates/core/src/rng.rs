//! Seed derivation for reproducible runs.
//!
//! Every run owns a single ChaCha stream whose seed is a pure function of
//! the master seed and the run's coordinates in the experiment. Results are
//! therefore identical no matter how runs are scheduled across threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The RNG used by all stochastic components of a run.
pub type RunRng = ChaCha8Rng;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derives an independent stream for run `run_index` of config `config_index`.
pub fn derive_rng(master_seed: u64, config_index: u64, run_index: u64) -> RunRng {
    let mut state = master_seed
        ^ config_index.wrapping_mul(0xa076_1d64_78bd_642f)
        ^ run_index.wrapping_mul(0xe703_7ed1_a0b4_28db);
    let mut seed = [0u8; 32];
    for chunk in seed.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha8Rng::from_seed(seed)
}
