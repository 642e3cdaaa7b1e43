use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "ecf",
    version,
    about = "Encrypted Container Files for sharing small secrets"
)]
pub struct Cli {
    /// Keystore holding your identity. Defaults to ~/.ecf/identity.ecfk.
    #[arg(long, global = true, env = "ECF_KEYSTORE")]
    pub keystore: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KdfProfile {
    /// Parallelism 1, 2048 MiB, 5 iterations.
    Default,
    /// Cheap parameters for tests and CI. Not for real keys.
    Ci,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Create a new identity: a password-protected keystore and a public descriptor.
    Keygen {
        /// Name shown to other recipients, e.g. "Alice <alice@example.org>".
        #[arg(long)]
        name: String,
        /// Keystore path. The descriptor goes to <out>.pub.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "ECF_KDF_PROFILE", value_enum, default_value = "default")]
        kdf_profile: KdfProfile,
        /// Overwrite existing files.
        #[arg(long)]
        force: bool,
    },
    /// Show the contents of a public descriptor file.
    Info { descriptor: PathBuf },
    /// Encrypt content for a set of recipients.
    Create {
        /// Output container.
        out: PathBuf,
        /// Descriptor files of the recipients.
        #[arg(short, long = "recipient")]
        recipients: Vec<PathBuf>,
        /// Add the descriptor next to your keystore as a recipient.
        #[arg(long)]
        add_self: bool,
        /// Content file; reads stdin when omitted or "-".
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// Cipher suite: 1 (SHA-512) or 2 (SHA-256).
        #[arg(long, default_value_t = 1)]
        suite: u32,
        #[command(flatten)]
        write: WriteFlags,
        #[arg(long)]
        force: bool,
    },
    /// Decrypt a container and write its content.
    Extract {
        container: PathBuf,
        /// Output file; writes to stdout when omitted or "-".
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        load: LoadFlags,
        #[arg(long)]
        force: bool,
    },
    /// Replace the content of a container, keeping its recipients.
    Update {
        container: PathBuf,
        /// New content file; reads stdin when omitted or "-".
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        load: LoadFlags,
        #[command(flatten)]
        write: WriteFlags,
    },
    /// List, add or remove recipients.
    Recipients {
        #[command(subcommand)]
        action: RecipientsAction,
    },
    /// Print the public metadata of a container. Needs no identity.
    Inspect { container: PathBuf },
    /// Time one key derivation with the chosen profile.
    BenchKdf {
        #[arg(long, env = "ECF_KDF_PROFILE", value_enum, default_value = "default")]
        kdf_profile: KdfProfile,
    },
}

#[derive(Debug, Subcommand)]
pub enum RecipientsAction {
    /// Print name, fingerprint and name-signature status of every recipient.
    List { container: PathBuf },
    /// Add the holder of a descriptor file and re-encrypt.
    Add {
        container: PathBuf,
        descriptor: PathBuf,
        /// Accept a name that another recipient already uses.
        #[arg(long)]
        allow_duplicate_name: bool,
        #[command(flatten)]
        load: LoadFlags,
        #[command(flatten)]
        write: WriteFlags,
    },
    /// Remove one recipient and re-encrypt.
    Remove {
        container: PathBuf,
        #[command(flatten)]
        selector: Selector,
        /// Required to remove your own identity.
        #[arg(long)]
        confirm_self_removal: bool,
        #[command(flatten)]
        load: LoadFlags,
        #[command(flatten)]
        write: WriteFlags,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Selector {
    /// Recipient public key, 64 hex characters.
    #[arg(long)]
    pub key: Option<String>,
    /// Recipient name. Must be unique in the container.
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Debug, Args)]
pub struct LoadFlags {
    /// Skip checking the recipients' name signatures.
    #[arg(long)]
    pub no_verify_names: bool,
}

#[derive(Debug, Args)]
pub struct WriteFlags {
    /// Build decoy recipient blocks with real key agreements (slower).
    #[arg(long)]
    pub full_obfuscation: bool,
}
