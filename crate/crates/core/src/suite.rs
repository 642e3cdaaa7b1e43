use std::fmt;

/// The algorithm tuple a container is encrypted with.
///
/// Both suites use X25519 for key agreement, AES-256-GCM for the private
/// part and Ed25519 for name signatures; they differ only in the hash.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CipherSuite {
    /// X25519 / AES-256-GCM / Ed25519 / SHA-512.
    #[default]
    Sha512 = 1,
    /// X25519 / AES-256-GCM / Ed25519 / SHA-256.
    Sha256 = 2,
}

impl CipherSuite {
    pub const ALL: [CipherSuite; 2] = [CipherSuite::Sha512, CipherSuite::Sha256];

    pub fn from_id(id: u32) -> Option<Self> {
        match id {
            1 => Some(Self::Sha512),
            2 => Some(Self::Sha256),
            _ => None,
        }
    }

    pub const fn id(self) -> u32 {
        self as u32
    }

    /// Length of the digest fields in the private part.
    pub const fn hash_len(self) -> usize {
        match self {
            Self::Sha512 => 64,
            Self::Sha256 => 32,
        }
    }

    /// Length of the key agreement information inside one recipient block.
    pub const fn key_agreement_len(self) -> usize {
        64
    }

    /// Serialized size of one recipient block (tag plus key agreement info).
    pub const fn block_len(self) -> usize {
        crate::format::TAG_LEN + self.key_agreement_len()
    }

    pub const fn hash_name(self) -> &'static str {
        match self {
            Self::Sha512 => "SHA-512",
            Self::Sha256 => "SHA-256",
        }
    }
}

impl fmt::Display for CipherSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (X25519 / AES-256-GCM / Ed25519 / {})",
            self.id(),
            self.hash_name()
        )
    }
}
