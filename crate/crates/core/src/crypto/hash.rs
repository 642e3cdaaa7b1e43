use sha2::{Digest, Sha256, Sha512};
use zeroize::Zeroize;

use super::Secret;
use crate::format::{SALT_LEN, TAG_LEN};
use crate::suite::CipherSuite;

/// Suite hash over the concatenation of `parts`.
pub fn hash_parts(suite: CipherSuite, parts: &[&[u8]]) -> Vec<u8> {
    match suite {
        CipherSuite::Sha512 => {
            let mut h = Sha512::new();
            parts.iter().for_each(|p| h.update(p));
            h.finalize().to_vec()
        }
        CipherSuite::Sha256 => {
            let mut h = Sha256::new();
            parts.iter().for_each(|p| h.update(p));
            h.finalize().to_vec()
        }
    }
}

pub fn hash(suite: CipherSuite, data: &[u8]) -> Vec<u8> {
    hash_parts(suite, &[data])
}

/// `H(pk_ed || salt)` truncated to 16 bytes.
pub fn compute_identification_tag(
    suite: CipherSuite,
    recipient_public_ed: &[u8; 32],
    salt: &[u8; SALT_LEN],
) -> [u8; TAG_LEN] {
    let digest = hash_parts(suite, &[recipient_public_ed, salt]);
    let mut tag = [0u8; TAG_LEN];
    tag.copy_from_slice(&digest[..TAG_LEN]);
    tag
}

/// Second AES pre key: `H(shared || pk_recipient_x || pk_ephemeral_x)`
/// truncated to 32 bytes.
pub fn derive_pre_key_2(
    suite: CipherSuite,
    shared: &Secret<32>,
    recipient_public_x: &[u8; 32],
    ephemeral_public_x: &[u8; 32],
) -> Secret<32> {
    let mut digest = hash_parts(
        suite,
        &[shared.expose(), recipient_public_x, ephemeral_public_x],
    );
    let mut key = [0u8; 32];
    key.copy_from_slice(&digest[..32]);
    digest.zeroize();
    Secret::take_from(&mut key)
}

/// Short hex identifier for a public key: the first 16 hex digits of its
/// SHA-512 digest.
pub fn fingerprint(public_key: &[u8; 32]) -> String {
    let digest = hash(CipherSuite::Sha512, public_key);
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn output_lengths() {
        assert_eq!(hash(CipherSuite::Sha512, b"x").len(), 64);
        assert_eq!(hash(CipherSuite::Sha256, b"x").len(), 32);
    }

    #[test]
    fn parts_equal_concatenation() {
        for suite in CipherSuite::ALL {
            assert_eq!(
                hash_parts(suite, &[b"ab", b"", b"cd"]),
                hash(suite, b"abcd")
            );
        }
    }

    #[test]
    fn pre_key_2_is_order_sensitive() {
        let shared = Secret::new([1u8; 32]);
        let a = derive_pre_key_2(CipherSuite::Sha512, &shared, &[2; 32], &[3; 32]);
        let b = derive_pre_key_2(CipherSuite::Sha512, &shared, &[3; 32], &[2; 32]);
        assert_ne!(a, b);
    }

    #[test]
    fn pre_key_2_sha256_is_full_digest() {
        let shared = Secret::new([1u8; 32]);
        let k = derive_pre_key_2(CipherSuite::Sha256, &shared, &[2; 32], &[3; 32]);
        let full = hash_parts(CipherSuite::Sha256, &[&[1; 32], &[2; 32], &[3; 32]]);
        assert_eq!(&k.expose()[..], &full[..]);
    }

    #[test]
    fn tag_depends_on_salt() {
        let pk = [9u8; 32];
        let a = compute_identification_tag(CipherSuite::Sha512, &pk, &[0; 16]);
        let b = compute_identification_tag(CipherSuite::Sha512, &pk, &[1; 16]);
        assert_ne!(a, b);
        assert_eq!(
            a,
            compute_identification_tag(CipherSuite::Sha512, &pk, &[0; 16])
        );
    }

    #[test]
    fn fingerprint_is_16_hex_chars() {
        let fp = fingerprint(&[0; 32]);
        assert_eq!(fp.len(), 16);
        assert!(fp.chars().all(|c| c.is_ascii_hexdigit()));
    }
}
