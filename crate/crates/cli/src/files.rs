use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use tempfile::NamedTempFile;

use crate::error::{Failure, Result, EXIT_IO};

pub fn read(path: &Path) -> Result<Vec<u8>> {
    std::fs::read(path).map_err(|e| Failure::io(path, e))
}

/// Reads `path`, or stdin for `None` and "-".
pub fn read_input(path: Option<&Path>) -> Result<Vec<u8>> {
    match path {
        Some(p) if p != Path::new("-") => read(p),
        _ => {
            let mut buf = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| Failure::io(Path::new("<stdin>"), e))?;
            Ok(buf)
        }
    }
}

/// Writes `bytes` to a temporary file next to `path` and renames it into
/// place, so readers only ever see the old or the complete new file.
/// Without `overwrite` an existing `path` is left alone.
pub fn write_atomic(path: &Path, bytes: &[u8], overwrite: bool) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let io = |e| Failure::io(path, e);
    let mut tmp = NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(bytes).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    if overwrite {
        tmp.persist(path).map_err(|e| io(e.error))?;
    } else {
        tmp.persist_noclobber(path).map_err(|e| {
            if e.error.kind() == std::io::ErrorKind::AlreadyExists {
                Failure::new(
                    EXIT_IO,
                    format!(
                        "{} already exists (use --force to overwrite)",
                        path.display()
                    ),
                )
            } else {
                io(e.error)
            }
        })?;
    }
    Ok(())
}

pub fn write_output(path: Option<&Path>, bytes: &[u8], overwrite: bool) -> Result<()> {
    match path {
        Some(p) if p != Path::new("-") => write_atomic(p, bytes, overwrite),
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)
                .and_then(|_| out.flush())
                .map_err(|e| Failure::io(Path::new("<stdout>"), e))
        }
    }
}

pub fn default_keystore() -> Result<PathBuf> {
    let home = std::env::var_os("HOME")
        .or_else(|| std::env::var_os("USERPROFILE"))
        .ok_or_else(|| Failure::new(EXIT_IO, "cannot locate home directory; set ECF_KEYSTORE"))?;
    Ok(PathBuf::from(home).join(".ecf").join("identity.ecfk"))
}

/// `<keystore>.pub`
pub fn descriptor_path(keystore: &Path) -> PathBuf {
    let mut name = keystore.as_os_str().to_owned();
    name.push(".pub");
    PathBuf::from(name)
}
