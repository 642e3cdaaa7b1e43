//! Byte-exact encoding of the container layout.
//!
//! A container file is the public part immediately followed by the
//! AES-GCM ciphertext of the private part (tag appended), nothing else:
//!
//! ```text
//! public part                      private part (encrypted)
//! +---------------------------+    +------------------------------+
//! | version            u32    |    | content type          u32    |
//! | cipher suite       u32    |    | public header hash    [d]    |
//! | public length      u32    |    | recipient count n     u32    |
//! | private length     u32    |    | n x (pk[32] name sig[64])    |
//! | block count m      u32    |    | content length        u32    |
//! | salt               [16]   |    | content               [len]  |
//! | nonce              [12]   |    | private hash          [d]    |
//! | m x (tag[16] epk[32] pre1[32])  +------------------------------+
//! +---------------------------+
//! ```
//!
//! All integers are little-endian; `d` is the suite's digest length. Nothing
//! here does cryptography; digests and keys are opaque byte strings.

mod body;
mod codec;
mod header;

pub use body::{
    parse_private_body, serialize_private_body, serialize_private_body_unsealed, PrivateBody,
    RecipientInfo,
};
pub use codec::{decode_u32, encode_string, encode_u32, Reader};
pub use header::{
    mask_public_header_length, parse_container, parse_public_header, serialize_public_header,
    ContainerFile, PublicHeader, RecipientBlock,
};

use thiserror::Error;

/// The only container version this crate reads and writes.
pub const CONTAINER_VERSION: u32 = 1;

/// Stand-in for the public header length while the public header hash is
/// computed.
pub const FORMAT_CODE: u32 = 0xECFF_C0DE;

/// Size of the fixed part of the public header.
pub const PUBLIC_FIXED_LEN: usize = 5 * 4 + SALT_LEN + NONCE_LEN;
pub const SALT_LEN: usize = 16;
pub const NONCE_LEN: usize = 12;
pub const TAG_LEN: usize = 16;
pub const AEAD_TAG_LEN: usize = 16;
pub const PUBLIC_KEY_LEN: usize = 32;
pub const SIGNATURE_LEN: usize = 64;

/// Upper bound on a recipient name accepted by the parser.
pub const MAX_NAME_LEN: usize = 64 * 1024;

/// Content type for opaque binary payloads, the only one defined.
pub const CONTENT_TYPE_BLOB: u32 = 0;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("input truncated: need {needed} bytes, have {available}")]
    Truncated { needed: u64, available: u64 },
    #[error("unsupported container version {0}")]
    UnsupportedVersion(u32),
    #[error("unsupported cipher suite {0}")]
    UnsupportedSuite(u32),
    #[error("length mismatch in {field}: expected {expected}, found {actual}")]
    LengthMismatch {
        field: &'static str,
        expected: u64,
        actual: u64,
    },
    #[error("recipient name is not valid UTF-8")]
    InvalidUtf8Name,
    #[error("string of {0} bytes exceeds the length limit")]
    OversizeString(usize),
}
