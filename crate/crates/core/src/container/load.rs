use subtle::ConstantTimeEq;

use super::{ContainerError, EncryptedContainer};
use crate::crypto::{
    aead_decrypt, compute_identification_tag, hash, unwrap_content_key, verify_name, Identity,
    KeyWrap,
};
use crate::format::{
    mask_public_header_length, parse_container, parse_private_body, CONTENT_TYPE_BLOB,
};

impl EncryptedContainer {
    /// Decrypts a container as `identity`.
    ///
    /// Every public block whose identification tag matches is tried in turn
    /// and the first one that authenticates wins. The private hash and the
    /// public header hash are then checked, followed by all recipient name
    /// signatures unless `verify_signatures` is false.
    ///
    /// Fails with [`ContainerError::NotARecipient`] when no block carries
    /// the identity's tag, and [`ContainerError::AuthenticationFailed`]
    /// when blocks match but none of them opens the private part.
    pub fn load(
        bytes: &[u8],
        identity: &Identity,
        verify_signatures: bool,
    ) -> Result<Self, ContainerError> {
        let file = parse_container(bytes)?;
        let header = &file.header;
        let suite = header.suite;

        let tag = compute_identification_tag(suite, identity.public_key(), &header.salt);
        let mut matched = false;
        let mut plaintext = None;
        for block in &header.blocks {
            if !bool::from(block.identification_tag.ct_eq(&tag)) {
                continue;
            }
            matched = true;
            let wrap = KeyWrap {
                ephemeral_public_key: block.ephemeral_public_key,
                aes_pre_key_1: block.aes_pre_key,
            };
            let Ok(key) = unwrap_content_key(suite, &wrap, identity) else {
                continue;
            };
            if let Ok(p) = aead_decrypt(&key, &header.symmetric_nonce, file.ciphertext) {
                plaintext = Some(p);
                break;
            }
        }
        let plaintext = match plaintext {
            Some(p) => p,
            None if matched => return Err(ContainerError::AuthenticationFailed),
            None => return Err(ContainerError::NotARecipient),
        };

        let body = parse_private_body(&plaintext, suite)?;
        let hashed_len = plaintext.len() - suite.hash_len();
        let private_hash = hash(suite, &plaintext[..hashed_len]);
        if !bool::from(private_hash.ct_eq(&body.private_hash)) {
            return Err(ContainerError::TamperedPrivatePart);
        }
        let mut masked = file.public_part.to_vec();
        mask_public_header_length(&mut masked);
        if !bool::from(hash(suite, &masked).ct_eq(&body.public_header_hash)) {
            return Err(ContainerError::TamperedPublicPart);
        }

        if body.content_type != CONTENT_TYPE_BLOB {
            return Err(ContainerError::UnsupportedContentType(body.content_type));
        }
        for (i, r) in body.recipients.iter().enumerate() {
            if body.recipients[..i]
                .iter()
                .any(|o| o.public_key == r.public_key)
            {
                return Err(ContainerError::DuplicateRecipientKey);
            }
        }
        if verify_signatures {
            if let Some(bad) = body
                .recipients
                .iter()
                .find(|r| !verify_name(&r.public_key, &r.name, &r.name_signature))
            {
                return Err(ContainerError::InvalidNameSignature {
                    name: bad.name.clone(),
                });
            }
        }

        Ok(Self {
            suite,
            content_type: body.content_type,
            recipients: body.recipients,
            content: body.content,
        })
    }
}
