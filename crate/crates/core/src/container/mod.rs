//! The container lifecycle: create, write, load, and editing of content and
//! recipients.
//!
//! Editing happens on the decrypted [`EncryptedContainer`]; every
//! [`EncryptedContainer::write`] re-encrypts from scratch with a fresh AES
//! key, nonce, salt and ephemeral keys.

mod descriptor;
mod load;
mod obfuscation;
mod write;

pub use descriptor::RecipientDescriptor;
pub use obfuscation::{
    choose_m, make_obfuscation_block_fast, make_obfuscation_block_full, ObfuscationMode,
};
pub use write::WriteOptions;

use thiserror::Error;
use zeroize::Zeroizing;

use crate::crypto::CryptoError;
use crate::format::{FormatError, RecipientInfo, CONTENT_TYPE_BLOB};
use crate::suite::CipherSuite;

/// Largest confidential payload the format can describe.
pub const MAX_CONTENT_LEN: u64 = u32::MAX as u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContainerError {
    #[error("malformed container: {0}")]
    Parse(#[from] FormatError),
    #[error("unsupported cipher suite {0}")]
    UnsupportedSuite(u32),
    #[error("unsupported content type {0}")]
    UnsupportedContentType(u32),
    #[error("container has no recipients")]
    NoRecipients,
    #[error("random number generator failed")]
    RandomnessFailure,
    #[error("content of {0} bytes exceeds the container limit")]
    ContentTooLarge(u64),
    #[error("identity is not a recipient of this container")]
    NotARecipient,
    #[error("private part failed authentication")]
    AuthenticationFailed,
    #[error("private hash mismatch")]
    TamperedPrivatePart,
    #[error("public header hash mismatch")]
    TamperedPublicPart,
    #[error("name signature of recipient {name:?} is invalid")]
    InvalidNameSignature { name: String },
    #[error("recipient descriptor signature is invalid")]
    InvalidSignature,
    #[error("recipient public key is not a valid curve point")]
    InvalidRecipientKey,
    #[error("recipient is already present")]
    AlreadyRecipient,
    #[error("a recipient named {0:?} already exists")]
    DuplicateName(String),
    #[error("private part lists the same public key twice")]
    DuplicateRecipientKey,
    #[error("no matching recipient")]
    NotFound,
    #[error("name {0:?} matches more than one recipient")]
    AmbiguousName(String),
    #[error("removing yourself requires explicit confirmation")]
    SelfRemovalNotConfirmed,
}

impl From<CryptoError> for ContainerError {
    fn from(e: CryptoError) -> Self {
        match e {
            CryptoError::InvalidPoint | CryptoError::InvalidRecipientKey => {
                Self::InvalidRecipientKey
            }
            CryptoError::AuthenticationFailed | CryptoError::LowOrderPoint => {
                Self::AuthenticationFailed
            }
            CryptoError::RandomnessFailure => Self::RandomnessFailure,
            CryptoError::ContentTooLarge => Self::ContentTooLarge(u64::MAX),
        }
    }
}

/// Picks the recipient to remove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecipientSelector {
    PublicKey([u8; 32]),
    /// Must match exactly one recipient.
    Name(String),
}

/// A decrypted container: suite, content type, recipient set and content.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncryptedContainer {
    suite: CipherSuite,
    content_type: u32,
    recipients: Vec<RecipientInfo>,
    content: Zeroizing<Vec<u8>>,
}

impl EncryptedContainer {
    /// New empty container. `suite_id` and `content_type` are the raw wire
    /// values.
    pub fn create(suite_id: u32, content_type: u32) -> Result<Self, ContainerError> {
        let suite =
            CipherSuite::from_id(suite_id).ok_or(ContainerError::UnsupportedSuite(suite_id))?;
        if content_type != CONTENT_TYPE_BLOB {
            return Err(ContainerError::UnsupportedContentType(content_type));
        }
        Ok(Self::new(suite))
    }

    /// New empty BLOB container.
    pub fn new(suite: CipherSuite) -> Self {
        Self {
            suite,
            content_type: CONTENT_TYPE_BLOB,
            recipients: Vec::new(),
            content: Zeroizing::new(Vec::new()),
        }
    }

    pub fn suite(&self) -> CipherSuite {
        self.suite
    }

    pub fn content_type(&self) -> u32 {
        self.content_type
    }

    pub fn recipients(&self) -> &[RecipientInfo] {
        &self.recipients
    }

    pub fn content(&self) -> &[u8] {
        &self.content
    }

    pub fn is_recipient(&self, public_key: &[u8; 32]) -> bool {
        self.recipients.iter().any(|r| &r.public_key == public_key)
    }

    pub fn set_content(&mut self, content: impl Into<Vec<u8>>) -> Result<(), ContainerError> {
        let content = Zeroizing::new(content.into());
        check_content_length(content.len() as u64)?;
        self.content = content;
        Ok(())
    }

    /// Adds a recipient after checking their name signature and that their
    /// key is not already present. With `allow_duplicate_name` unset, a
    /// second recipient with an existing name is refused too.
    pub fn add_recipient(
        &mut self,
        descriptor: RecipientDescriptor,
        allow_duplicate_name: bool,
    ) -> Result<(), ContainerError> {
        if !descriptor.verify() {
            return Err(ContainerError::InvalidSignature);
        }
        crate::crypto::ed25519_public_to_x25519(&descriptor.public_key)
            .map_err(|_| ContainerError::InvalidRecipientKey)?;
        if self.is_recipient(&descriptor.public_key) {
            return Err(ContainerError::AlreadyRecipient);
        }
        if !allow_duplicate_name && self.recipients.iter().any(|r| r.name == descriptor.name) {
            return Err(ContainerError::DuplicateName(descriptor.name));
        }
        self.recipients.push(descriptor.into());
        Ok(())
    }

    /// Removes one recipient and returns their record.
    ///
    /// Removing `acting_public_key` itself locks the caller out of every
    /// future version, so it needs `confirm_self_removal`.
    pub fn remove_recipient(
        &mut self,
        selector: &RecipientSelector,
        acting_public_key: &[u8; 32],
        confirm_self_removal: bool,
    ) -> Result<RecipientInfo, ContainerError> {
        let index = match selector {
            RecipientSelector::PublicKey(pk) => self
                .recipients
                .iter()
                .position(|r| &r.public_key == pk)
                .ok_or(ContainerError::NotFound)?,
            RecipientSelector::Name(name) => {
                let mut hits = self
                    .recipients
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| &r.name == name)
                    .map(|(i, _)| i);
                let first = hits.next().ok_or(ContainerError::NotFound)?;
                if hits.next().is_some() {
                    return Err(ContainerError::AmbiguousName(name.clone()));
                }
                first
            }
        };
        if &self.recipients[index].public_key == acting_public_key && !confirm_self_removal {
            return Err(ContainerError::SelfRemovalNotConfirmed);
        }
        Ok(self.recipients.remove(index))
    }
}

/// Rejects payloads whose length does not fit the content length field.
pub fn check_content_length(len: u64) -> Result<(), ContainerError> {
    if len > MAX_CONTENT_LEN {
        return Err(ContainerError::ContentTooLarge(len));
    }
    Ok(())
}
