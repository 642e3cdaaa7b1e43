//! Cryptographic building blocks: suite hashing, Ed25519/X25519 key handling,
//! per-recipient key wrapping and AES-256-GCM.
//!
//! Secret values travel in [`Secret`] buffers, which wipe themselves on drop.
//! All primitives come from the RustCrypto and dalek crates, whose
//! operations on secret data are constant-time.

mod aead;
mod hash;
mod keys;
mod secret;
mod wrap;

pub use aead::{aead_decrypt, aead_encrypt};
pub use hash::{compute_identification_tag, derive_pre_key_2, fingerprint, hash, hash_parts};
pub use keys::{
    ed25519_public_to_x25519, ed25519_seed_to_x25519, key_agreement, sign_name, verify_name,
    x25519_public_from_secret, Identity,
};
pub use secret::{erasure_count, Secret};
pub(crate) use wrap::wrap_with_ephemeral;
pub use wrap::{unwrap_content_key, wrap_content_key, ContentKey, KeyWrap};

use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum CryptoError {
    #[error("public key is not a valid curve point")]
    InvalidPoint,
    #[error("key agreement produced a low-order result")]
    LowOrderPoint,
    #[error("recipient public key is invalid")]
    InvalidRecipientKey,
    #[error("authentication failed")]
    AuthenticationFailed,
    #[error("random number generator failed")]
    RandomnessFailure,
    #[error("plaintext too large for AES-GCM")]
    ContentTooLarge,
}
