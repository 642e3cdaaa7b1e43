//! Public blocks that belong to no recipient, so the block count `m` only
//! bounds the true recipient count `n`.

use rand::Rng;
use rand_core::{CryptoRng, RngCore};

use crate::crypto::{
    compute_identification_tag, wrap_with_ephemeral, x25519_public_from_secret, CryptoError,
    Identity, Secret,
};
use crate::format::{RecipientBlock, SALT_LEN, TAG_LEN};
use crate::suite::CipherSuite;

/// How obfuscation blocks are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ObfuscationMode {
    /// Random tag and pre key next to a genuine ephemeral public key.
    #[default]
    Fast,
    /// Runs the full wrapping procedure against a throwaway identity.
    Full,
}

/// Draws the public block count uniformly from `[n, max(8, 2n)]`.
pub fn choose_m<R: RngCore + ?Sized>(n: usize, rng: &mut R) -> usize {
    let upper = n.saturating_mul(2).max(8);
    rng.gen_range(n..=upper)
}

/// Builds a block exactly like a real one, for a random identity nobody
/// holds. All generated secrets are wiped before returning.
pub fn make_obfuscation_block_full<R: RngCore + CryptoRng + ?Sized>(
    suite: CipherSuite,
    salt: &[u8; SALT_LEN],
    rng: &mut R,
) -> Result<RecipientBlock, CryptoError> {
    let throwaway = Identity::generate(rng)?;
    let identification_tag = compute_identification_tag(suite, throwaway.public_key(), salt);
    let ephemeral = Secret::random(rng)?;
    let random_key = Secret::<32>::random(rng)?;
    let wrap = wrap_with_ephemeral(suite, &random_key, throwaway.x25519_public(), ephemeral)?;
    Ok(RecipientBlock {
        identification_tag,
        ephemeral_public_key: wrap.ephemeral_public_key,
        aes_pre_key: wrap.aes_pre_key_1,
    })
}

/// Shortened generation: only the ephemeral public key is computed; tag and
/// pre key are uniformly random, as real ones look.
pub fn make_obfuscation_block_fast<R: RngCore + CryptoRng + ?Sized>(
    rng: &mut R,
) -> Result<RecipientBlock, CryptoError> {
    let ephemeral = Secret::random(rng)?;
    let ephemeral_public_key = x25519_public_from_secret(&ephemeral);
    let mut identification_tag = [0u8; TAG_LEN];
    let mut aes_pre_key = [0u8; 32];
    rng.try_fill_bytes(&mut identification_tag)
        .and_then(|_| rng.try_fill_bytes(&mut aes_pre_key))
        .map_err(|_| CryptoError::RandomnessFailure)?;
    Ok(RecipientBlock {
        identification_tag,
        ephemeral_public_key,
        aes_pre_key,
    })
}

pub(crate) fn make_obfuscation_block<R: RngCore + CryptoRng + ?Sized>(
    mode: ObfuscationMode,
    suite: CipherSuite,
    salt: &[u8; SALT_LEN],
    rng: &mut R,
) -> Result<RecipientBlock, CryptoError> {
    match mode {
        ObfuscationMode::Fast => make_obfuscation_block_fast(rng),
        ObfuscationMode::Full => make_obfuscation_block_full(suite, salt, rng),
    }
}
