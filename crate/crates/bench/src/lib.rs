//! Deterministic inputs shared by the benchmarks.

use ecf_core::crypto::Secret;
use ecf_core::{CipherSuite, EncryptedContainer, Identity, RecipientDescriptor};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

pub fn identities(rng: &mut ChaCha20Rng, n: usize) -> Vec<Identity> {
    (0..n)
        .map(|_| {
            let mut seed = [0u8; 32];
            rng.fill_bytes(&mut seed);
            Identity::from_seed(Secret::new(seed))
        })
        .collect()
}

/// Container for `ids` with `content_len` random bytes.
pub fn container(
    suite: CipherSuite,
    ids: &[Identity],
    content_len: usize,
    rng: &mut ChaCha20Rng,
) -> EncryptedContainer {
    let mut c = EncryptedContainer::new(suite);
    for (i, id) in ids.iter().enumerate() {
        c.add_recipient(RecipientDescriptor::new(id, &format!("user{i}")), false)
            .expect("fresh identities are distinct");
    }
    let mut content = vec![0u8; content_len];
    rng.fill_bytes(&mut content);
    c.set_content(content).expect("content fits");
    c
}
