//! Parameters the committed fixtures were generated from.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

pub const GOLDEN_SEED: u64 = 0x0ECF_601D;
pub const CONTENT: &[u8] = b"db_password=correct horse battery staple\n";
pub const ALICE: &str = "Alice <alice@example.org>";
pub const BOB: &str = "Bob <bob@example.org>";
pub const PASSWORD: &[u8] = b"golden fixture password";

/// Seeds of Alice and Bob, replayed from the recorded RNG.
pub fn seeds() -> [[u8; 32]; 2] {
    let mut rng = ChaCha20Rng::seed_from_u64(GOLDEN_SEED);
    let mut out = [[0u8; 32]; 2];
    for seed in &mut out {
        rng.fill_bytes(seed);
    }
    out
}
