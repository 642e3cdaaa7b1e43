//! Password-protected storage of identities.
//!
//! A keystore file is 96 bytes, integers little-endian:
//!
//! ```text
//! magic "ECFK" [4] | version u32 | parallelism u32 | memory MiB u32 |
//! iterations u32 | argon2 salt [16] | nonce [12] | sealed seed [48]
//! ```
//!
//! The sealed seed is the 32-byte Ed25519 seed encrypted with AES-256-GCM
//! under an Argon2id key derived from the password and the recorded
//! parameters; the 16-byte tag follows the ciphertext.

use argon2::{Algorithm, Argon2, Params, Version};
use rand_core::{CryptoRng, RngCore};
use thiserror::Error;
use zeroize::Zeroize;

use crate::container::RecipientDescriptor;
use crate::crypto::{aead_decrypt, aead_encrypt, CryptoError, Identity, Secret};
use crate::format::{Reader, MAX_NAME_LEN, NONCE_LEN, SALT_LEN};

pub const KEYSTORE_MAGIC: [u8; 4] = *b"ECFK";
pub const KEYSTORE_VERSION: u32 = 1;
pub const KEYSTORE_LEN: usize = 96;
const SEALED_SEED_LEN: usize = 32 + 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KeystoreError {
    #[error("not a keystore file")]
    BadMagic,
    #[error("unsupported keystore version {0}")]
    UnsupportedVersion(u32),
    #[error("keystore must be {KEYSTORE_LEN} bytes, found {0}")]
    Malformed(usize),
    #[error("wrong password or corrupted keystore")]
    AuthenticationFailed,
    #[error("password must not be empty")]
    EmptyPassword,
    #[error("KDF parameters below the safe minimum: {0:?}")]
    InvalidParameters(KdfParameters),
    #[error("key derivation failed: {0}")]
    Kdf(String),
    #[error("random number generator failed")]
    RandomnessFailure,
    #[error("name must not be empty")]
    EmptyName,
    #[error("name of {0} bytes exceeds the limit")]
    OversizeName(usize),
}

/// Argon2id cost settings, recorded in each keystore.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KdfParameters {
    pub parallelism: u32,
    pub memory_mib: u32,
    pub iterations: u32,
}

impl KdfParameters {
    /// Production profile: 1 lane, 2 GiB, 5 passes.
    pub const DEFAULT: Self = Self {
        parallelism: 1,
        memory_mib: 2048,
        iterations: 5,
    };

    /// Cheap profile for tests and CI. Not for real keys.
    pub const CI: Self = Self {
        parallelism: 1,
        memory_mib: 16,
        iterations: 2,
    };

    pub const MIN_MEMORY_MIB: u32 = 8;

    pub fn memory_bytes(&self) -> u64 {
        self.memory_mib as u64 * 1024 * 1024
    }

    pub fn validate(&self) -> Result<(), KeystoreError> {
        if self.parallelism < 1 || self.memory_mib < Self::MIN_MEMORY_MIB || self.iterations < 1 {
            return Err(KeystoreError::InvalidParameters(*self));
        }
        Ok(())
    }

    /// Argon2id key derivation with these parameters.
    pub fn derive_key(
        &self,
        password: &[u8],
        salt: &[u8; SALT_LEN],
    ) -> Result<Secret<32>, KeystoreError> {
        self.validate()?;
        let memory_kib = self
            .memory_mib
            .checked_mul(1024)
            .ok_or(KeystoreError::InvalidParameters(*self))?;
        let params = Params::new(memory_kib, self.iterations, self.parallelism, Some(32))
            .map_err(|e| KeystoreError::Kdf(e.to_string()))?;
        let argon = Argon2::new(Algorithm::Argon2id, Version::V0x13, params);
        let mut key = Secret::new([0u8; 32]);
        argon
            .hash_password_into(password, salt, key.expose_mut())
            .map_err(|e| KeystoreError::Kdf(e.to_string()))?;
        Ok(key)
    }
}

impl Default for KdfParameters {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Parsed keystore file; the seed is still sealed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeystoreFile {
    pub kdf: KdfParameters,
    pub argon_salt: [u8; SALT_LEN],
    pub nonce: [u8; NONCE_LEN],
    pub sealed_seed: [u8; SEALED_SEED_LEN],
}

impl KeystoreFile {
    pub fn to_bytes(&self) -> [u8; KEYSTORE_LEN] {
        let mut out = Vec::with_capacity(KEYSTORE_LEN);
        out.extend_from_slice(&KEYSTORE_MAGIC);
        for v in [
            KEYSTORE_VERSION,
            self.kdf.parallelism,
            self.kdf.memory_mib,
            self.kdf.iterations,
        ] {
            out.extend_from_slice(&v.to_le_bytes());
        }
        out.extend_from_slice(&self.argon_salt);
        out.extend_from_slice(&self.nonce);
        out.extend_from_slice(&self.sealed_seed);
        out.try_into().expect("fixed keystore layout")
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, KeystoreError> {
        if bytes.len() < 4 || bytes[..4] != KEYSTORE_MAGIC {
            return Err(KeystoreError::BadMagic);
        }
        if bytes.len() != KEYSTORE_LEN {
            return Err(KeystoreError::Malformed(bytes.len()));
        }
        let mut r = Reader::new(&bytes[4..]);
        let read = |r: &mut Reader<'_>| r.u32().map_err(|_| KeystoreError::Malformed(bytes.len()));
        let version = read(&mut r)?;
        if version != KEYSTORE_VERSION {
            return Err(KeystoreError::UnsupportedVersion(version));
        }
        let kdf = KdfParameters {
            parallelism: read(&mut r)?,
            memory_mib: read(&mut r)?,
            iterations: read(&mut r)?,
        };
        let malformed = |_| KeystoreError::Malformed(bytes.len());
        Ok(Self {
            kdf,
            argon_salt: r.array().map_err(malformed)?,
            nonce: r.array().map_err(malformed)?,
            sealed_seed: r.array().map_err(malformed)?,
        })
    }
}

/// Fresh random identity.
pub fn generate_identity<R: RngCore + CryptoRng + ?Sized>(
    rng: &mut R,
) -> Result<Identity, KeystoreError> {
    Identity::generate(rng).map_err(|_| KeystoreError::RandomnessFailure)
}

/// Seals `identity` under `password`, with a fresh salt and nonce.
pub fn save_identity<R: RngCore + CryptoRng + ?Sized>(
    identity: &Identity,
    password: &[u8],
    params: KdfParameters,
    rng: &mut R,
) -> Result<[u8; KEYSTORE_LEN], KeystoreError> {
    if password.is_empty() {
        return Err(KeystoreError::EmptyPassword);
    }
    let mut argon_salt = [0u8; SALT_LEN];
    let mut nonce = [0u8; NONCE_LEN];
    rng.try_fill_bytes(&mut argon_salt)
        .and_then(|_| rng.try_fill_bytes(&mut nonce))
        .map_err(|_| KeystoreError::RandomnessFailure)?;
    let key = params.derive_key(password, &argon_salt)?;
    let sealed = aead_encrypt(&key, &nonce, identity.seed().expose()).map_err(|e| match e {
        CryptoError::RandomnessFailure => KeystoreError::RandomnessFailure,
        other => KeystoreError::Kdf(other.to_string()),
    })?;
    let file = KeystoreFile {
        kdf: params,
        argon_salt,
        nonce,
        sealed_seed: sealed.try_into().expect("seed plus tag is 48 bytes"),
    };
    Ok(file.to_bytes())
}

/// Opens a keystore with the parameters recorded inside it.
pub fn load_identity(bytes: &[u8], password: &[u8]) -> Result<Identity, KeystoreError> {
    let file = KeystoreFile::from_bytes(bytes)?;
    let key = file.kdf.derive_key(password, &file.argon_salt)?;
    let plain = aead_decrypt(&key, &file.nonce, &file.sealed_seed)
        .map_err(|_| KeystoreError::AuthenticationFailed)?;
    let mut seed = [0u8; 32];
    seed.copy_from_slice(&plain);
    drop(plain);
    let identity = Identity::from_seed(Secret::take_from(&mut seed));
    seed.zeroize();
    Ok(identity)
}

/// Signs `name` and packages it with the public key for distribution.
pub fn export_descriptor(
    identity: &Identity,
    name: &str,
) -> Result<RecipientDescriptor, KeystoreError> {
    if name.is_empty() {
        return Err(KeystoreError::EmptyName);
    }
    if name.len() > MAX_NAME_LEN {
        return Err(KeystoreError::OversizeName(name.len()));
    }
    Ok(RecipientDescriptor::new(identity, name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::OsRng;

    #[test]
    fn save_load_round_trip() {
        let id = generate_identity(&mut OsRng).unwrap();
        let bytes = save_identity(&id, b"pw", KdfParameters::CI, &mut OsRng).unwrap();
        assert_eq!(bytes.len(), 96);
        assert_eq!(&bytes[..4], b"ECFK");
        let back = load_identity(&bytes, b"pw").unwrap();
        assert_eq!(back.public_key(), id.public_key());
        assert_eq!(back.x25519_public(), id.x25519_public());
    }

    #[test]
    fn wrong_password() {
        let id = generate_identity(&mut OsRng).unwrap();
        let bytes = save_identity(&id, b"pw", KdfParameters::CI, &mut OsRng).unwrap();
        assert_eq!(
            load_identity(&bytes, b"pW").unwrap_err(),
            KeystoreError::AuthenticationFailed
        );
    }

    #[test]
    fn empty_password_refused() {
        let id = generate_identity(&mut OsRng).unwrap();
        assert_eq!(
            save_identity(&id, b"", KdfParameters::CI, &mut OsRng).unwrap_err(),
            KeystoreError::EmptyPassword
        );
    }

    #[test]
    fn default_parameters_layout() {
        let file = KeystoreFile {
            kdf: KdfParameters::DEFAULT,
            argon_salt: [0; 16],
            nonce: [0; 12],
            sealed_seed: [0; 48],
        };
        let bytes = file.to_bytes();
        assert_eq!(&bytes[4..8], &[1, 0, 0, 0]);
        assert_eq!(&bytes[8..12], &[1, 0, 0, 0]);
        assert_eq!(&bytes[12..16], &2048u32.to_le_bytes());
        assert_eq!(&bytes[16..20], &[5, 0, 0, 0]);
        assert_eq!(KeystoreFile::from_bytes(&bytes).unwrap(), file);
        assert_eq!(KdfParameters::DEFAULT.memory_bytes(), 2 << 30);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            KeystoreFile::from_bytes(b"EC").unwrap_err(),
            KeystoreError::BadMagic
        );
        assert_eq!(
            KeystoreFile::from_bytes(&[0; 96]).unwrap_err(),
            KeystoreError::BadMagic
        );
        let file = KeystoreFile {
            kdf: KdfParameters::CI,
            argon_salt: [0; 16],
            nonce: [0; 12],
            sealed_seed: [0; 48],
        };
        let bytes = file.to_bytes();
        assert_eq!(
            KeystoreFile::from_bytes(&bytes[..60]).unwrap_err(),
            KeystoreError::Malformed(60)
        );
        let mut v2 = bytes;
        v2[4] = 2;
        assert_eq!(
            KeystoreFile::from_bytes(&v2).unwrap_err(),
            KeystoreError::UnsupportedVersion(2)
        );
    }

    #[test]
    fn parameter_floor() {
        let weak = KdfParameters {
            parallelism: 1,
            memory_mib: 4,
            iterations: 1,
        };
        assert!(matches!(
            weak.derive_key(b"pw", &[0; 16]),
            Err(KeystoreError::InvalidParameters(_))
        ));
        assert!(KdfParameters {
            iterations: 0,
            ..KdfParameters::CI
        }
        .validate()
        .is_err());
        assert!(KdfParameters {
            parallelism: 0,
            ..KdfParameters::CI
        }
        .validate()
        .is_err());
    }

    #[test]
    fn descriptor_name_checks() {
        let id = generate_identity(&mut OsRng).unwrap();
        assert_eq!(
            export_descriptor(&id, "").unwrap_err(),
            KeystoreError::EmptyName
        );
        let long = "x".repeat(MAX_NAME_LEN + 1);
        assert_eq!(
            export_descriptor(&id, &long).unwrap_err(),
            KeystoreError::OversizeName(MAX_NAME_LEN + 1)
        );
        assert!(export_descriptor(&id, "Bob").unwrap().verify());
    }
}
