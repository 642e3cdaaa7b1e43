use curve25519_dalek::edwards::CompressedEdwardsY;
use ed25519_dalek::{Signature, Signer, SigningKey, VerifyingKey};
use rand_core::{CryptoRng, RngCore};
use sha2::{Digest, Sha512};
use x25519_dalek::{PublicKey as XPublicKey, StaticSecret};
use zeroize::Zeroize;

use super::{CryptoError, Secret};

/// A user's long-term key material: an Ed25519 seed and the X25519 pair
/// derived from it.
#[derive(Clone)]
pub struct Identity {
    seed: Secret<32>,
    ed25519_public: [u8; 32],
    x25519_secret: Secret<32>,
    x25519_public: [u8; 32],
}

impl Identity {
    pub fn from_seed(seed: Secret<32>) -> Self {
        let signing = SigningKey::from_bytes(seed.expose());
        let ed25519_public = signing.verifying_key().to_bytes();
        let x25519_secret = ed25519_seed_to_x25519(&seed);
        let x25519_public = x25519_public_from_secret(&x25519_secret);
        Self {
            seed,
            ed25519_public,
            x25519_secret,
            x25519_public,
        }
    }

    pub fn generate<R: RngCore + CryptoRng + ?Sized>(rng: &mut R) -> Result<Self, CryptoError> {
        Secret::random(rng).map(Self::from_seed)
    }

    pub fn public_key(&self) -> &[u8; 32] {
        &self.ed25519_public
    }

    pub fn x25519_public(&self) -> &[u8; 32] {
        &self.x25519_public
    }

    pub(crate) fn x25519_secret(&self) -> &Secret<32> {
        &self.x25519_secret
    }

    pub(crate) fn seed(&self) -> &Secret<32> {
        &self.seed
    }

    /// Ed25519 signature over `message`.
    pub fn sign(&self, message: &[u8]) -> [u8; 64] {
        SigningKey::from_bytes(self.seed.expose())
            .sign(message)
            .to_bytes()
    }
}

impl std::fmt::Debug for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Identity")
            .field("public_key", &super::fingerprint(&self.ed25519_public))
            .finish_non_exhaustive()
    }
}

/// Signs the raw UTF-8 bytes of a recipient name.
pub fn sign_name(identity: &Identity, name: &str) -> [u8; 64] {
    identity.sign(name.as_bytes())
}

/// Checks a name signature. Malformed keys or signatures verify as false.
pub fn verify_name(public_ed: &[u8; 32], name: &str, signature: &[u8; 64]) -> bool {
    let Ok(key) = VerifyingKey::from_bytes(public_ed) else {
        return false;
    };
    key.verify_strict(name.as_bytes(), &Signature::from_bytes(signature))
        .is_ok()
}

/// X25519 private scalar for an Ed25519 seed: the clamped lower half of
/// `SHA-512(seed)`, the same scalar Ed25519 signs with.
pub fn ed25519_seed_to_x25519(seed: &Secret<32>) -> Secret<32> {
    let mut digest = Sha512::digest(seed.expose());
    let mut scalar = [0u8; 32];
    scalar.copy_from_slice(&digest[..32]);
    digest.as_mut_slice().zeroize();
    scalar[0] &= 248;
    scalar[31] &= 127;
    scalar[31] |= 64;
    Secret::take_from(&mut scalar)
}

/// Maps an Ed25519 public key to the Montgomery form, `u = (1 + y) / (1 - y)`.
pub fn ed25519_public_to_x25519(public_ed: &[u8; 32]) -> Result<[u8; 32], CryptoError> {
    let point = CompressedEdwardsY(*public_ed)
        .decompress()
        .ok_or(CryptoError::InvalidPoint)?;
    if point.is_small_order() {
        return Err(CryptoError::InvalidPoint);
    }
    Ok(point.to_montgomery().to_bytes())
}

pub fn x25519_public_from_secret(secret: &Secret<32>) -> [u8; 32] {
    let scalar = StaticSecret::from(*secret.expose());
    XPublicKey::from(&scalar).to_bytes()
}

/// `X25519(scalar, point)`. An all-zero result, produced by small-order
/// points, is rejected.
pub fn key_agreement(scalar: &Secret<32>, point: &[u8; 32]) -> Result<Secret<32>, CryptoError> {
    let secret = StaticSecret::from(*scalar.expose());
    let shared = secret.diffie_hellman(&XPublicKey::from(*point));
    if !shared.was_contributory() {
        return Err(CryptoError::LowOrderPoint);
    }
    Ok(Secret::new(shared.to_bytes()))
}
