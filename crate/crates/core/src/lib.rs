pub mod container;
pub mod crypto;
pub mod format;
pub mod keystore;
mod suite;

pub use container::{
    ContainerError, EncryptedContainer, ObfuscationMode, RecipientDescriptor, RecipientSelector,
    WriteOptions,
};
pub use crypto::{CryptoError, Identity};
pub use format::{FormatError, PublicHeader, RecipientBlock, RecipientInfo};
pub use keystore::{KdfParameters, KeystoreError};
pub use suite::CipherSuite;
