use std::path::{Path, PathBuf};
use std::time::Instant;

use ecf_core::crypto::{fingerprint, verify_name};
use ecf_core::format::parse_container;
use ecf_core::keystore::{export_descriptor, generate_identity, load_identity, save_identity};
use ecf_core::{
    EncryptedContainer, Identity, KdfParameters, ObfuscationMode, RecipientDescriptor,
    RecipientSelector, WriteOptions,
};
use rand::rngs::OsRng;

use crate::cli::{KdfProfile, LoadFlags, RecipientsAction, Selector, WriteFlags};
use crate::error::{Failure, Result, EXIT_GENERIC, EXIT_INVALID_SIGNATURE, EXIT_IO};
use crate::files::{self, descriptor_path, write_atomic};
use crate::password::{new_password, unlock_password};

pub fn kdf_parameters(profile: KdfProfile) -> KdfParameters {
    match profile {
        KdfProfile::Default => KdfParameters::DEFAULT,
        KdfProfile::Ci => KdfParameters::CI,
    }
}

fn write_options(flags: &WriteFlags) -> WriteOptions {
    WriteOptions {
        obfuscation: if flags.full_obfuscation {
            ObfuscationMode::Full
        } else {
            ObfuscationMode::Fast
        },
        ..WriteOptions::default()
    }
}

fn read_descriptor(path: &Path) -> Result<RecipientDescriptor> {
    let bytes = files::read(path)?;
    RecipientDescriptor::from_bytes(&bytes).map_err(|e| {
        Failure::new(
            EXIT_INVALID_SIGNATURE,
            format!("{}: malformed descriptor: {e}", path.display()),
        )
    })
}

fn unlock(keystore: &Path) -> Result<Identity> {
    let bytes = files::read(keystore)?;
    let password = unlock_password(keystore)?;
    Ok(load_identity(&bytes, password.as_bytes())?)
}

fn open(container: &Path, identity: &Identity, flags: &LoadFlags) -> Result<EncryptedContainer> {
    let bytes = files::read(container)?;
    Ok(EncryptedContainer::load(
        &bytes,
        identity,
        !flags.no_verify_names,
    )?)
}

fn save(container: &Path, c: &EncryptedContainer, flags: &WriteFlags) -> Result<()> {
    let bytes = c.write_with(&mut OsRng, &write_options(flags))?;
    write_atomic(container, &bytes, true)
}

pub fn keygen(keystore: PathBuf, name: &str, profile: KdfProfile, force: bool) -> Result<()> {
    let public = descriptor_path(&keystore);
    if !force {
        for path in [&keystore, &public] {
            if path.exists() {
                return Err(Failure::new(
                    EXIT_IO,
                    format!(
                        "{} already exists (use --force to overwrite)",
                        path.display()
                    ),
                ));
            }
        }
    }
    if let Some(dir) = keystore.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Failure::io(dir, e))?;
    }
    let identity = generate_identity(&mut OsRng)?;
    let descriptor = export_descriptor(&identity, name)?;
    let password = new_password()?;
    let sealed = save_identity(
        &identity,
        password.as_bytes(),
        kdf_parameters(profile),
        &mut OsRng,
    )?;
    let descriptor_bytes = descriptor.to_bytes()?;

    write_atomic(&keystore, &sealed, force)?;
    write_atomic(&public, &descriptor_bytes, force)?;
    println!("keystore:    {}", keystore.display());
    println!("descriptor:  {}", public.display());
    println!("fingerprint: {}", fingerprint(identity.public_key()));
    Ok(())
}

pub fn info(path: &Path) -> Result<()> {
    let d = read_descriptor(path)?;
    println!("name:        {}", d.name);
    println!("fingerprint: {}", fingerprint(&d.public_key));
    println!("public key:  {}", hex::encode(d.public_key));
    println!(
        "signature:   {}",
        if d.verify() { "valid" } else { "INVALID" }
    );
    if !d.verify() {
        return Err(Failure::new(
            EXIT_INVALID_SIGNATURE,
            "descriptor signature is invalid",
        ));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
pub fn create(
    keystore: &Path,
    out: &Path,
    recipients: &[PathBuf],
    add_self: bool,
    input: Option<&Path>,
    suite: u32,
    write: &WriteFlags,
    force: bool,
) -> Result<()> {
    let mut c = EncryptedContainer::create(suite, 0)?;
    let own_path = descriptor_path(keystore);
    if add_self {
        c.add_recipient(read_descriptor(&own_path)?, false)?;
    }
    for path in recipients {
        c.add_recipient(read_descriptor(path)?, false)
            .map_err(|e| Failure::from(e).with_path(path))?;
    }
    if c.recipients().is_empty() {
        return Err(ecf_core::ContainerError::NoRecipients.into());
    }
    let own = RecipientDescriptor::from_bytes(&std::fs::read(&own_path).unwrap_or_default()).ok();
    if own.is_some_and(|d| !c.is_recipient(&d.public_key)) {
        eprintln!("warning: you are not a recipient and will not be able to open this file");
    }
    c.set_content(files::read_input(input)?)?;
    let bytes = c.write_with(&mut OsRng, &write_options(write))?;
    write_atomic(out, &bytes, force)
}

pub fn extract(
    keystore: &Path,
    container: &Path,
    out: Option<&Path>,
    load: &LoadFlags,
    force: bool,
) -> Result<()> {
    let identity = unlock(keystore)?;
    let c = open(container, &identity, load)?;
    files::write_output(out, c.content(), force)
}

pub fn update(
    keystore: &Path,
    container: &Path,
    input: Option<&Path>,
    load: &LoadFlags,
    write: &WriteFlags,
) -> Result<()> {
    let identity = unlock(keystore)?;
    let mut c = open(container, &identity, load)?;
    c.set_content(files::read_input(input)?)?;
    save(container, &c, write)
}

pub fn recipients(keystore: &Path, action: RecipientsAction) -> Result<()> {
    let identity = unlock(keystore)?;
    match action {
        RecipientsAction::List { container } => {
            // signatures are reported per entry instead of failing the load
            let c = open(
                &container,
                &identity,
                &LoadFlags {
                    no_verify_names: true,
                },
            )?;
            for r in c.recipients() {
                let status = if verify_name(&r.public_key, &r.name, &r.name_signature) {
                    "valid"
                } else {
                    "INVALID"
                };
                let me = if &r.public_key == identity.public_key() {
                    " (you)"
                } else {
                    ""
                };
                println!(
                    "{}  signature {status:<7}  {}{me}",
                    fingerprint(&r.public_key),
                    r.name
                );
            }
            Ok(())
        }
        RecipientsAction::Add {
            container,
            descriptor,
            allow_duplicate_name,
            load,
            write,
        } => {
            let mut c = open(&container, &identity, &load)?;
            let d = read_descriptor(&descriptor)?;
            let label = format!("{} ({})", d.name, fingerprint(&d.public_key));
            c.add_recipient(d, allow_duplicate_name)?;
            save(&container, &c, &write)?;
            eprintln!("added {label}");
            Ok(())
        }
        RecipientsAction::Remove {
            container,
            selector,
            confirm_self_removal,
            load,
            write,
        } => {
            let selector = parse_selector(selector)?;
            let mut c = open(&container, &identity, &load)?;
            let removed =
                c.remove_recipient(&selector, identity.public_key(), confirm_self_removal)?;
            save(&container, &c, &write)?;
            eprintln!(
                "removed {} ({})",
                removed.name,
                fingerprint(&removed.public_key)
            );
            eprintln!("note: copies of earlier versions remain readable to them");
            Ok(())
        }
    }
}

fn parse_selector(s: Selector) -> Result<RecipientSelector> {
    match (s.key, s.name) {
        (Some(key), _) => {
            let bytes = hex::decode(key.trim())
                .ok()
                .and_then(|b| <[u8; 32]>::try_from(b).ok())
                .ok_or_else(|| Failure::new(EXIT_GENERIC, "--key needs 64 hex characters"))?;
            Ok(RecipientSelector::PublicKey(bytes))
        }
        (None, Some(name)) => Ok(RecipientSelector::Name(name)),
        (None, None) => Err(Failure::new(EXIT_GENERIC, "give --key or --name")),
    }
}

pub fn inspect(container: &Path) -> Result<()> {
    let bytes = files::read(container)?;
    let file = parse_container(&bytes)?;
    let h = &file.header;
    println!(
        "container version:                        {}",
        h.container_version
    );
    println!("cipher suite:                             {}", h.suite);
    println!(
        "recipient blocks (includes obfuscation):  {}",
        h.blocks.len()
    );
    println!(
        "public header length:                     {}",
        h.public_header_length
    );
    println!(
        "private length:                           {}",
        h.private_length
    );
    println!("total size:                               {}", bytes.len());
    println!(
        "salt:                                     {}",
        hex::encode(h.salt)
    );
    println!(
        "nonce:                                    {}",
        hex::encode(h.symmetric_nonce)
    );
    Ok(())
}

pub fn bench_kdf(profile: KdfProfile) -> Result<()> {
    let params = kdf_parameters(profile);
    let start = Instant::now();
    params.derive_key(b"benchmark password", &[0u8; 16])?;
    let elapsed = start.elapsed();
    println!(
        "argon2id p={} m={} MiB t={}: {:.2} s",
        params.parallelism,
        params.memory_mib,
        params.iterations,
        elapsed.as_secs_f64()
    );
    Ok(())
}
