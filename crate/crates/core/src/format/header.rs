use super::codec::{put_u32, Reader};
use super::{
    FormatError, AEAD_TAG_LEN, CONTAINER_VERSION, FORMAT_CODE, NONCE_LEN, PUBLIC_FIXED_LEN,
    PUBLIC_KEY_LEN, SALT_LEN, TAG_LEN,
};
use crate::suite::CipherSuite;

/// Offset of the public header length field inside the public part.
const LENGTH_FIELD: std::ops::Range<usize> = 8..12;

/// One public per-recipient block. Obfuscation blocks share the layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RecipientBlock {
    pub identification_tag: [u8; TAG_LEN],
    pub ephemeral_public_key: [u8; PUBLIC_KEY_LEN],
    pub aes_pre_key: [u8; 32],
}

impl RecipientBlock {
    fn write(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.identification_tag);
        out.extend_from_slice(&self.ephemeral_public_key);
        out.extend_from_slice(&self.aes_pre_key);
    }

    fn read(r: &mut Reader<'_>) -> Result<Self, FormatError> {
        Ok(Self {
            identification_tag: r.array()?,
            ephemeral_public_key: r.array()?,
            aes_pre_key: r.array()?,
        })
    }
}

/// The cleartext prefix of a container.
///
/// The block count `m` is `blocks.len()`; it is written on serialization and
/// checked against the declared length on parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PublicHeader {
    pub container_version: u32,
    pub suite: CipherSuite,
    pub public_header_length: u32,
    pub private_length: u32,
    pub salt: [u8; SALT_LEN],
    pub symmetric_nonce: [u8; NONCE_LEN],
    pub blocks: Vec<RecipientBlock>,
}

impl PublicHeader {
    /// Builds a header with the public length derived from the block count.
    pub fn new(
        suite: CipherSuite,
        private_length: u32,
        salt: [u8; SALT_LEN],
        symmetric_nonce: [u8; NONCE_LEN],
        blocks: Vec<RecipientBlock>,
    ) -> Self {
        let public_header_length = Self::expected_len(suite, blocks.len() as u64) as u32;
        Self {
            container_version: CONTAINER_VERSION,
            suite,
            public_header_length,
            private_length,
            salt,
            symmetric_nonce,
            blocks,
        }
    }

    pub fn recipient_count_public(&self) -> u32 {
        self.blocks.len() as u32
    }

    /// Serialized size of a public part holding `m` blocks.
    pub fn expected_len(suite: CipherSuite, m: u64) -> u64 {
        PUBLIC_FIXED_LEN as u64 + m * suite.block_len() as u64
    }

    /// Serialization with the length field replaced by the format code; this
    /// is the input of the public header hash.
    pub fn serialize_masked(&self) -> Vec<u8> {
        let mut out = serialize_public_header(self);
        mask_public_header_length(&mut out);
        out
    }
}

pub fn serialize_public_header(h: &PublicHeader) -> Vec<u8> {
    let mut out = Vec::with_capacity(h.public_header_length as usize);
    put_u32(&mut out, h.container_version);
    put_u32(&mut out, h.suite.id());
    put_u32(&mut out, h.public_header_length);
    put_u32(&mut out, h.private_length);
    put_u32(&mut out, h.recipient_count_public());
    out.extend_from_slice(&h.salt);
    out.extend_from_slice(&h.symmetric_nonce);
    for block in &h.blocks {
        block.write(&mut out);
    }
    out
}

/// Overwrites the public header length field of a serialized public part
/// with [`FORMAT_CODE`].
pub fn mask_public_header_length(public_part: &mut [u8]) {
    public_part[LENGTH_FIELD].copy_from_slice(&FORMAT_CODE.to_le_bytes());
}

/// Parses the public part at the start of `bytes`. Trailing input (the
/// ciphertext) is left untouched; the header consumes exactly
/// `public_header_length` bytes.
pub fn parse_public_header(bytes: &[u8]) -> Result<PublicHeader, FormatError> {
    let mut r = Reader::new(bytes);
    let container_version = r.u32()?;
    let suite_id = r.u32()?;
    let public_header_length = r.u32()?;
    let private_length = r.u32()?;
    let m = r.u32()?;
    let salt = r.array()?;
    let symmetric_nonce = r.array()?;

    if container_version != CONTAINER_VERSION {
        return Err(FormatError::UnsupportedVersion(container_version));
    }
    let suite = CipherSuite::from_id(suite_id).ok_or(FormatError::UnsupportedSuite(suite_id))?;
    let expected = PublicHeader::expected_len(suite, m as u64);
    if public_header_length as u64 != expected {
        return Err(FormatError::LengthMismatch {
            field: "public header length",
            expected,
            actual: public_header_length as u64,
        });
    }
    if (bytes.len() as u64) < expected {
        return Err(FormatError::Truncated {
            needed: expected,
            available: bytes.len() as u64,
        });
    }

    let blocks = (0..m)
        .map(|_| RecipientBlock::read(&mut r))
        .collect::<Result<Vec<_>, _>>()?;
    debug_assert_eq!(r.position() as u64, expected);

    Ok(PublicHeader {
        container_version,
        suite,
        public_header_length,
        private_length,
        salt,
        symmetric_nonce,
        blocks,
    })
}

/// A whole container file split into its two regions.
#[derive(Debug, Clone)]
pub struct ContainerFile<'a> {
    pub header: PublicHeader,
    /// The public part exactly as received.
    pub public_part: &'a [u8],
    /// Ciphertext of the private part followed by the GCM tag.
    pub ciphertext: &'a [u8],
}

/// Splits a container file, requiring exactly `private_length` bytes after
/// the public part.
pub fn parse_container(bytes: &[u8]) -> Result<ContainerFile<'_>, FormatError> {
    let header = parse_public_header(bytes)?;
    let public_len = header.public_header_length as usize;
    let private_len = header.private_length as u64;
    let min_private = (AEAD_TAG_LEN + super::body::min_len(header.suite)) as u64;
    if private_len < min_private {
        return Err(FormatError::LengthMismatch {
            field: "private length",
            expected: min_private,
            actual: private_len,
        });
    }
    let total = public_len as u64 + private_len;
    let actual = bytes.len() as u64;
    if actual < total {
        return Err(FormatError::Truncated {
            needed: total,
            available: actual,
        });
    }
    if actual > total {
        return Err(FormatError::LengthMismatch {
            field: "file length",
            expected: total,
            actual,
        });
    }
    Ok(ContainerFile {
        header,
        public_part: &bytes[..public_len],
        ciphertext: &bytes[public_len..],
    })
}
