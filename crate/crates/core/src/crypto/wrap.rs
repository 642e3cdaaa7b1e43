use rand_core::{CryptoRng, RngCore};

use super::keys::{ed25519_public_to_x25519, key_agreement, x25519_public_from_secret};
use super::{derive_pre_key_2, CryptoError, Identity, Secret};
use crate::format::NONCE_LEN;
use crate::suite::CipherSuite;

/// The symmetric key and nonce protecting one version of a container.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContentKey {
    pub aes_key: Secret<32>,
    pub nonce: [u8; NONCE_LEN],
}

impl ContentKey {
    pub fn generate<R: RngCore + CryptoRng + ?Sized>(rng: &mut R) -> Result<Self, CryptoError> {
        let aes_key = Secret::random(rng)?;
        let mut nonce = [0u8; NONCE_LEN];
        rng.try_fill_bytes(&mut nonce)
            .map_err(|_| CryptoError::RandomnessFailure)?;
        Ok(Self { aes_key, nonce })
    }
}

/// Per-recipient key agreement information as stored in a public block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KeyWrap {
    pub ephemeral_public_key: [u8; 32],
    /// `k_aes XOR pre_key_2`.
    pub aes_pre_key_1: [u8; 32],
}

fn xor32(a: &[u8; 32], b: &[u8; 32]) -> [u8; 32] {
    std::array::from_fn(|i| a[i] ^ b[i])
}

/// Wraps `aes_key` for the holder of the X25519 key `recipient_public_x`,
/// using `ephemeral_secret` as the sender half of the exchange. The
/// ephemeral secret is consumed and wiped.
pub(crate) fn wrap_with_ephemeral(
    suite: CipherSuite,
    aes_key: &Secret<32>,
    recipient_public_x: &[u8; 32],
    ephemeral_secret: Secret<32>,
) -> Result<KeyWrap, CryptoError> {
    let ephemeral_public_key = x25519_public_from_secret(&ephemeral_secret);
    let shared = key_agreement(&ephemeral_secret, recipient_public_x)?;
    drop(ephemeral_secret);
    let pre_key_2 = derive_pre_key_2(suite, &shared, recipient_public_x, &ephemeral_public_key);
    Ok(KeyWrap {
        ephemeral_public_key,
        aes_pre_key_1: xor32(aes_key.expose(), pre_key_2.expose()),
    })
}

/// Encrypts the content key to a recipient identified by their Ed25519
/// public key, with a fresh ephemeral X25519 pair.
pub fn wrap_content_key<R: RngCore + CryptoRng + ?Sized>(
    suite: CipherSuite,
    content_key: &ContentKey,
    recipient_public_ed: &[u8; 32],
    rng: &mut R,
) -> Result<KeyWrap, CryptoError> {
    let recipient_public_x = ed25519_public_to_x25519(recipient_public_ed)
        .map_err(|_| CryptoError::InvalidRecipientKey)?;
    let ephemeral = Secret::random(rng)?;
    wrap_with_ephemeral(suite, &content_key.aes_key, &recipient_public_x, ephemeral)
}

/// Recovers the AES key from a wrap addressed to `identity`. A wrap for
/// somebody else yields an unrelated key, detected by the AEAD afterwards.
pub fn unwrap_content_key(
    suite: CipherSuite,
    wrap: &KeyWrap,
    identity: &Identity,
) -> Result<Secret<32>, CryptoError> {
    let shared = key_agreement(identity.x25519_secret(), &wrap.ephemeral_public_key)?;
    let pre_key_2 = derive_pre_key_2(
        suite,
        &shared,
        identity.x25519_public(),
        &wrap.ephemeral_public_key,
    );
    let mut key = xor32(&wrap.aes_pre_key_1, pre_key_2.expose());
    Ok(Secret::take_from(&mut key))
}
