use zeroize::Zeroizing;

use super::codec::{put_string, put_u32, Reader};
use super::{FormatError, MAX_NAME_LEN, PUBLIC_KEY_LEN, SIGNATURE_LEN};
use crate::suite::CipherSuite;

/// A recipient as recorded inside the private part.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RecipientInfo {
    pub public_key: [u8; PUBLIC_KEY_LEN],
    pub name: String,
    pub name_signature: [u8; SIGNATURE_LEN],
}

impl RecipientInfo {
    pub(crate) fn write(&self, out: &mut Vec<u8>) -> Result<(), FormatError> {
        out.extend_from_slice(&self.public_key);
        put_string(out, &self.name)?;
        out.extend_from_slice(&self.name_signature);
        Ok(())
    }

    pub(crate) fn read(r: &mut Reader<'_>) -> Result<Self, FormatError> {
        Ok(Self {
            public_key: r.array()?,
            name: r.string(MAX_NAME_LEN)?,
            name_signature: r.array()?,
        })
    }

    pub fn encoded_len(&self) -> usize {
        PUBLIC_KEY_LEN + 4 + self.name.len() + SIGNATURE_LEN
    }
}

/// Decrypted private part of a container.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrivateBody {
    pub content_type: u32,
    pub public_header_hash: Vec<u8>,
    pub recipients: Vec<RecipientInfo>,
    pub content: Zeroizing<Vec<u8>>,
    pub private_hash: Vec<u8>,
}

impl PrivateBody {
    /// Serialized length for the given suite.
    pub fn encoded_len(&self, suite: CipherSuite) -> u64 {
        let infos: u64 = self.recipients.iter().map(|r| r.encoded_len() as u64).sum();
        min_len(suite) as u64 + infos + self.content.len() as u64
    }
}

/// Smallest possible body: no recipients and no content.
pub(crate) const fn min_len(suite: CipherSuite) -> usize {
    3 * 4 + 2 * suite.hash_len()
}

/// Serializes every field up to, but excluding, the private hash. This is
/// the private hash input.
pub fn serialize_private_body_unsealed(b: &PrivateBody) -> Result<Zeroizing<Vec<u8>>, FormatError> {
    let mut out = Zeroizing::new(Vec::with_capacity(
        b.encoded_len(CipherSuite::Sha512) as usize
    ));
    put_u32(&mut out, b.content_type);
    out.extend_from_slice(&b.public_header_hash);
    put_u32(&mut out, count_u32(b.recipients.len(), "recipient count")?);
    for info in &b.recipients {
        info.write(&mut out)?;
    }
    put_u32(&mut out, count_u32(b.content.len(), "content length")?);
    out.extend_from_slice(&b.content);
    Ok(out)
}

pub fn serialize_private_body(b: &PrivateBody) -> Result<Zeroizing<Vec<u8>>, FormatError> {
    let mut out = serialize_private_body_unsealed(b)?;
    out.extend_from_slice(&b.private_hash);
    Ok(out)
}

fn count_u32(len: usize, field: &'static str) -> Result<u32, FormatError> {
    u32::try_from(len).map_err(|_| FormatError::LengthMismatch {
        field,
        expected: u32::MAX as u64,
        actual: len as u64,
    })
}

/// Parses a decrypted private part. The suite fixes the digest lengths; the
/// input must end exactly after the private hash.
pub fn parse_private_body(bytes: &[u8], suite: CipherSuite) -> Result<PrivateBody, FormatError> {
    let d = suite.hash_len();
    let mut r = Reader::new(bytes);
    let content_type = r.u32()?;
    let public_header_hash = r.take(d)?.to_vec();
    let n = r.u32()?;
    // every info block is at least 100 bytes; cap the reservation accordingly
    let min_info = PUBLIC_KEY_LEN + 4 + SIGNATURE_LEN;
    let mut recipients = Vec::with_capacity((n as usize).min(r.remaining() / min_info));
    for _ in 0..n {
        recipients.push(RecipientInfo::read(&mut r)?);
    }
    let content_len = r.u32()? as usize;
    let content = Zeroizing::new(r.take(content_len)?.to_vec());
    let private_hash = r.take(d)?.to_vec();
    r.finish()?;
    Ok(PrivateBody {
        content_type,
        public_header_hash,
        recipients,
        content,
        private_hash,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn empty(suite: CipherSuite) -> PrivateBody {
        PrivateBody {
            content_type: 0,
            public_header_hash: vec![0x11; suite.hash_len()],
            recipients: vec![],
            content: Zeroizing::new(vec![]),
            private_hash: vec![0x22; suite.hash_len()],
        }
    }

    #[test]
    fn empty_body_sizes() {
        let b = empty(CipherSuite::Sha512);
        let bytes = serialize_private_body(&b).unwrap();
        assert_eq!(bytes.len(), 4 + 64 + 4 + 4 + 64);
        assert_eq!(bytes.len() as u64, b.encoded_len(CipherSuite::Sha512));
        let b = empty(CipherSuite::Sha256);
        assert_eq!(
            serialize_private_body(&b).unwrap().len(),
            4 + 32 + 4 + 4 + 32
        );
    }

    #[test]
    fn private_hash_is_last() {
        let mut b = empty(CipherSuite::Sha512);
        b.content = Zeroizing::new(b"secret".to_vec());
        let bytes = serialize_private_body(&b).unwrap();
        assert_eq!(&bytes[bytes.len() - 64..], &[0x22; 64][..]);
        let unsealed = serialize_private_body_unsealed(&b).unwrap();
        assert_eq!(&bytes[..bytes.len() - 64], &unsealed[..]);
    }

    #[test]
    fn round_trip_with_recipients() {
        let mut b = empty(CipherSuite::Sha256);
        b.recipients = vec![
            RecipientInfo {
                public_key: [1; 32],
                name: "Alice".into(),
                name_signature: [2; 64],
            },
            RecipientInfo {
                public_key: [3; 32],
                name: "Bob <bob@example.org>".into(),
                name_signature: [4; 64],
            },
        ];
        b.content = Zeroizing::new(vec![9; 300]);
        let bytes = serialize_private_body(&b).unwrap();
        assert_eq!(bytes.len() as u64, b.encoded_len(CipherSuite::Sha256));
        assert_eq!(parse_private_body(&bytes, CipherSuite::Sha256).unwrap(), b);
    }

    #[test]
    fn trailing_byte_is_length_mismatch() {
        let b = empty(CipherSuite::Sha512);
        let mut bytes = serialize_private_body(&b).unwrap().to_vec();
        bytes.push(0);
        assert!(matches!(
            parse_private_body(&bytes, CipherSuite::Sha512),
            Err(FormatError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn wrong_suite_fails() {
        let b = empty(CipherSuite::Sha512);
        let bytes = serialize_private_body(&b).unwrap();
        assert!(parse_private_body(&bytes, CipherSuite::Sha256).is_err());
    }

    #[test]
    fn invalid_name_is_rejected() {
        let mut b = empty(CipherSuite::Sha512);
        b.recipients.push(RecipientInfo {
            public_key: [1; 32],
            name: "ab".into(),
            name_signature: [2; 64],
        });
        let mut bytes = serialize_private_body(&b).unwrap().to_vec();
        // name payload starts after type, hash, count, public key and length
        let at = 4 + 64 + 4 + 32 + 4;
        bytes[at] = 0xFF;
        assert_eq!(
            parse_private_body(&bytes, CipherSuite::Sha512),
            Err(FormatError::InvalidUtf8Name)
        );
    }

    #[test]
    fn huge_recipient_count_is_rejected() {
        let b = empty(CipherSuite::Sha512);
        let mut bytes = serialize_private_body(&b).unwrap().to_vec();
        bytes[68..72].copy_from_slice(&u32::MAX.to_le_bytes());
        assert!(parse_private_body(&bytes, CipherSuite::Sha512).is_err());
    }
}
