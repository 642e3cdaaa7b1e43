#![allow(dead_code)]

pub mod golden;
pub mod oracle;

use std::path::PathBuf;

use ecf_core::crypto::Secret;
use ecf_core::{CipherSuite, EncryptedContainer, Identity, RecipientDescriptor};
use rand::{Rng, RngCore};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn identity_from_seed(seed: [u8; 32]) -> Identity {
    Identity::from_seed(Secret::new(seed))
}

/// Random identity together with its seed, for oracle checks.
pub fn seeded_identity<R: RngCore>(rng: &mut R) -> ([u8; 32], Identity) {
    let mut seed = [0u8; 32];
    rng.fill_bytes(&mut seed);
    (seed, identity_from_seed(seed))
}

pub fn descriptor(id: &Identity, name: &str) -> RecipientDescriptor {
    RecipientDescriptor::new(id, name)
}

/// Container with `identities.len()` recipients named `r0`, `r1`, ...
pub fn container_for<R: Rng>(
    suite: CipherSuite,
    identities: &[Identity],
    content_len: usize,
    rng: &mut R,
) -> EncryptedContainer {
    let mut c = EncryptedContainer::new(suite);
    for (i, id) in identities.iter().enumerate() {
        c.add_recipient(descriptor(id, &format!("r{i}")), false)
            .unwrap();
    }
    let mut content = vec![0u8; content_len];
    rng.fill_bytes(&mut content);
    c.set_content(content).unwrap();
    c
}
