use crate::crypto::{sign_name, verify_name, Identity};
use crate::format::{
    FormatError, Reader, RecipientInfo, MAX_NAME_LEN, PUBLIC_KEY_LEN, SIGNATURE_LEN,
};

/// The public information a user hands out so others can add them as a
/// recipient: Ed25519 public key, self-chosen name and a signature over the
/// name's UTF-8 bytes.
///
/// Serialized as `public_key[32] || u32 len || name || signature[64]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RecipientDescriptor {
    pub public_key: [u8; PUBLIC_KEY_LEN],
    pub name: String,
    pub name_signature: [u8; SIGNATURE_LEN],
}

impl RecipientDescriptor {
    /// Signs `name` with `identity`.
    pub fn new(identity: &Identity, name: &str) -> Self {
        Self {
            public_key: *identity.public_key(),
            name: name.to_owned(),
            name_signature: sign_name(identity, name),
        }
    }

    pub fn verify(&self) -> bool {
        verify_name(&self.public_key, &self.name, &self.name_signature)
    }

    pub fn to_bytes(&self) -> Result<Vec<u8>, FormatError> {
        let mut out = Vec::with_capacity(PUBLIC_KEY_LEN + 4 + self.name.len() + SIGNATURE_LEN);
        RecipientInfo::from(self.clone()).write(&mut out)?;
        Ok(out)
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, FormatError> {
        let mut r = Reader::new(bytes);
        let public_key = r.array()?;
        let name = r.string(MAX_NAME_LEN)?;
        let name_signature = r.array()?;
        r.finish()?;
        Ok(Self {
            public_key,
            name,
            name_signature,
        })
    }
}

impl From<RecipientDescriptor> for RecipientInfo {
    fn from(d: RecipientDescriptor) -> Self {
        Self {
            public_key: d.public_key,
            name: d.name,
            name_signature: d.name_signature,
        }
    }
}

impl From<RecipientInfo> for RecipientDescriptor {
    fn from(r: RecipientInfo) -> Self {
        Self {
            public_key: r.public_key,
            name: r.name,
            name_signature: r.name_signature,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::OsRng;

    #[test]
    fn bytes_round_trip() {
        let id = Identity::generate(&mut OsRng).unwrap();
        let d = RecipientDescriptor::new(&id, "Bob <bob@example.org>");
        let bytes = d.to_bytes().unwrap();
        assert_eq!(bytes.len(), 32 + 4 + 21 + 64);
        assert_eq!(&bytes[32..36], &[21, 0, 0, 0]);
        assert_eq!(&bytes[36..57], b"Bob <bob@example.org>");
        let back = RecipientDescriptor::from_bytes(&bytes).unwrap();
        assert_eq!(back, d);
        assert!(back.verify());
    }

    #[test]
    fn altered_name_fails_verification() {
        let id = Identity::generate(&mut OsRng).unwrap();
        let mut d = RecipientDescriptor::new(&id, "Bob");
        d.name = "Rob".into();
        assert!(!d.verify());
    }

    #[test]
    fn truncated_and_padded_inputs() {
        let id = Identity::generate(&mut OsRng).unwrap();
        let bytes = RecipientDescriptor::new(&id, "Bob").to_bytes().unwrap();
        assert!(RecipientDescriptor::from_bytes(&bytes[..bytes.len() - 1]).is_err());
        let mut padded = bytes.clone();
        padded.push(0);
        assert!(RecipientDescriptor::from_bytes(&padded).is_err());
    }
}
