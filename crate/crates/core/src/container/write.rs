use rand::rngs::OsRng;
use rand::seq::SliceRandom;
use rand_core::{CryptoRng, RngCore};

use super::obfuscation::{choose_m, make_obfuscation_block};
use super::{ContainerError, EncryptedContainer, ObfuscationMode};
use crate::crypto::{
    aead_encrypt, compute_identification_tag, hash, wrap_content_key, ContentKey, CryptoError,
};
use crate::format::{
    serialize_private_body_unsealed, serialize_public_header, PrivateBody, PublicHeader,
    RecipientBlock, AEAD_TAG_LEN, SALT_LEN,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WriteOptions {
    pub obfuscation: ObfuscationMode,
    /// Permit writing a container nobody can open.
    pub allow_no_recipients: bool,
}

impl EncryptedContainer {
    /// Encrypts the container with fresh key material from the OS RNG.
    pub fn write(&self) -> Result<Vec<u8>, ContainerError> {
        self.write_with(&mut OsRng, &WriteOptions::default())
    }

    /// Encrypts the container, drawing every random value from `rng`.
    pub fn write_with<R: RngCore + CryptoRng + ?Sized>(
        &self,
        rng: &mut R,
        options: &WriteOptions,
    ) -> Result<Vec<u8>, ContainerError> {
        let n = self.recipients.len();
        if n == 0 && !options.allow_no_recipients {
            return Err(ContainerError::NoRecipients);
        }
        let suite = self.suite;

        let content_key = ContentKey::generate(rng)?;
        let mut salt = [0u8; SALT_LEN];
        rng.try_fill_bytes(&mut salt)
            .map_err(|_| CryptoError::RandomnessFailure)?;

        let m = choose_m(n, rng);
        let mut blocks = Vec::with_capacity(m);
        for recipient in &self.recipients {
            let wrap = wrap_content_key(suite, &content_key, &recipient.public_key, rng)?;
            blocks.push(RecipientBlock {
                identification_tag: compute_identification_tag(suite, &recipient.public_key, &salt),
                ephemeral_public_key: wrap.ephemeral_public_key,
                aes_pre_key: wrap.aes_pre_key_1,
            });
        }
        for _ in n..m {
            blocks.push(make_obfuscation_block(
                options.obfuscation,
                suite,
                &salt,
                rng,
            )?);
        }
        blocks.shuffle(rng);

        let mut body = PrivateBody {
            content_type: self.content_type,
            public_header_hash: vec![0; suite.hash_len()],
            recipients: self.recipients.clone(),
            content: self.content.clone(),
            private_hash: vec![0; suite.hash_len()],
        };
        let private_length = body.encoded_len(suite) + AEAD_TAG_LEN as u64;
        let private_length = u32::try_from(private_length)
            .map_err(|_| ContainerError::ContentTooLarge(self.content.len() as u64))?;

        let header = PublicHeader::new(suite, private_length, salt, content_key.nonce, blocks);
        body.public_header_hash = hash(suite, &header.serialize_masked());
        let mut plaintext = serialize_private_body_unsealed(&body)?;
        let private_hash = hash(suite, &plaintext);
        plaintext.extend_from_slice(&private_hash);
        debug_assert_eq!(plaintext.len() + AEAD_TAG_LEN, private_length as usize);

        let ciphertext = aead_encrypt(&content_key.aes_key, &content_key.nonce, &plaintext)?;
        let mut out = serialize_public_header(&header);
        out.extend_from_slice(&ciphertext);
        Ok(out)
    }
}
