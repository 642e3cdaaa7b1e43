use std::fmt;
use std::path::Path;
use std::process::ExitCode;

use ecf_core::{ContainerError, FormatError, KeystoreError};

pub const EXIT_GENERIC: u8 = 1;
pub const EXIT_IO: u8 = 2;
pub const EXIT_PASSWORD: u8 = 3;
pub const EXIT_INVALID_SIGNATURE: u8 = 4;
pub const EXIT_NO_RECIPIENTS: u8 = 5;
pub const EXIT_NOT_A_RECIPIENT: u8 = 6;
pub const EXIT_TAMPERED: u8 = 7;
pub const EXIT_RECIPIENT_SET: u8 = 8;
pub const EXIT_SELF_REMOVAL: u8 = 9;
pub const EXIT_PARSE: u8 = 10;
pub const EXIT_KEYSTORE: u8 = 11;

/// A failure with the process exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

pub type Result<T, E = Failure> = std::result::Result<T, E>;

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }

    pub fn io(path: &Path, err: std::io::Error) -> Self {
        Self::new(EXIT_IO, format!("{}: {err}", path.display()))
    }

    pub fn with_path(mut self, path: &Path) -> Self {
        self.message = format!("{}: {}", path.display(), self.message);
        self
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.code)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<ContainerError> for Failure {
    fn from(e: ContainerError) -> Self {
        use ContainerError::*;
        let code = match &e {
            Parse(_) | UnsupportedSuite(_) | UnsupportedContentType(_) => EXIT_PARSE,
            InvalidSignature | InvalidRecipientKey => EXIT_INVALID_SIGNATURE,
            NoRecipients => EXIT_NO_RECIPIENTS,
            NotARecipient => EXIT_NOT_A_RECIPIENT,
            AuthenticationFailed
            | TamperedPrivatePart
            | TamperedPublicPart
            | InvalidNameSignature { .. }
            | DuplicateRecipientKey => EXIT_TAMPERED,
            AlreadyRecipient | DuplicateName(_) | NotFound | AmbiguousName(_) => EXIT_RECIPIENT_SET,
            SelfRemovalNotConfirmed => EXIT_SELF_REMOVAL,
            RandomnessFailure | ContentTooLarge(_) => EXIT_GENERIC,
        };
        Self::new(code, e.to_string())
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        ContainerError::Parse(e).into()
    }
}

impl From<KeystoreError> for Failure {
    fn from(e: KeystoreError) -> Self {
        let code = match e {
            KeystoreError::EmptyPassword => EXIT_PASSWORD,
            KeystoreError::EmptyName | KeystoreError::OversizeName(_) => EXIT_GENERIC,
            KeystoreError::RandomnessFailure | KeystoreError::Kdf(_) => EXIT_GENERIC,
            _ => EXIT_KEYSTORE,
        };
        Self::new(code, e.to_string())
    }
}
