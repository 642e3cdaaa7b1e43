use aes_gcm::aead::{Aead, KeyInit};
use aes_gcm::{Aes256Gcm, Key, Nonce};
use zeroize::Zeroizing;

use super::{CryptoError, Secret};
use crate::format::NONCE_LEN;

/// AES-256-GCM without associated data. The 16-byte tag is appended.
pub fn aead_encrypt(
    key: &Secret<32>,
    nonce: &[u8; NONCE_LEN],
    plaintext: &[u8],
) -> Result<Vec<u8>, CryptoError> {
    let cipher = Aes256Gcm::new(Key::<Aes256Gcm>::from_slice(key.expose()));
    cipher
        .encrypt(Nonce::from_slice(nonce), plaintext)
        .map_err(|_| CryptoError::ContentTooLarge)
}

/// Authenticates and decrypts; nothing is released on failure.
pub fn aead_decrypt(
    key: &Secret<32>,
    nonce: &[u8; NONCE_LEN],
    ciphertext: &[u8],
) -> Result<Zeroizing<Vec<u8>>, CryptoError> {
    let cipher = Aes256Gcm::new(Key::<Aes256Gcm>::from_slice(key.expose()));
    cipher
        .decrypt(Nonce::from_slice(nonce), ciphertext)
        .map(Zeroizing::new)
        .map_err(|_| CryptoError::AuthenticationFailed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn appends_tag_and_round_trips() {
        let key = Secret::new([3u8; 32]);
        let ct = aead_encrypt(&key, &[1; 12], b"hello").unwrap();
        assert_eq!(ct.len(), 5 + 16);
        assert_eq!(&aead_decrypt(&key, &[1; 12], &ct).unwrap()[..], b"hello");
    }

    #[test]
    fn every_bit_flip_fails() {
        let key = Secret::new([3u8; 32]);
        let ct = aead_encrypt(&key, &[1; 12], b"hello").unwrap();
        for i in 0..ct.len() * 8 {
            let mut bad = ct.clone();
            bad[i / 8] ^= 1 << (i % 8);
            assert_eq!(
                aead_decrypt(&key, &[1; 12], &bad),
                Err(CryptoError::AuthenticationFailed)
            );
        }
    }

    #[test]
    fn wrong_key_or_nonce_fails() {
        let key = Secret::new([3u8; 32]);
        let ct = aead_encrypt(&key, &[1; 12], b"hello").unwrap();
        assert!(aead_decrypt(&Secret::new([4u8; 32]), &[1; 12], &ct).is_err());
        assert!(aead_decrypt(&key, &[2; 12], &ct).is_err());
    }
}
