use std::path::Path;

use zeroize::Zeroizing;

use crate::error::{Failure, Result, EXIT_IO, EXIT_PASSWORD};

pub const PASSWORD_ENV: &str = "ECF_PASSWORD";

fn from_env() -> Option<Zeroizing<String>> {
    std::env::var(PASSWORD_ENV).ok().map(Zeroizing::new)
}

fn prompt(text: &str) -> Result<Zeroizing<String>> {
    rpassword::prompt_password(text)
        .map(Zeroizing::new)
        .map_err(|e| Failure::new(EXIT_IO, format!("cannot read password: {e}")))
}

fn non_empty(p: Zeroizing<String>) -> Result<Zeroizing<String>> {
    if p.is_empty() {
        return Err(Failure::new(EXIT_PASSWORD, "password must not be empty"));
    }
    Ok(p)
}

/// Password for a new keystore, asked twice when interactive.
pub fn new_password() -> Result<Zeroizing<String>> {
    if let Some(p) = from_env() {
        return non_empty(p);
    }
    let first = non_empty(prompt("New keystore password: ")?)?;
    let second = prompt("Repeat password: ")?;
    if *first != *second {
        return Err(Failure::new(EXIT_PASSWORD, "passwords do not match"));
    }
    Ok(first)
}

pub fn unlock_password(keystore: &Path) -> Result<Zeroizing<String>> {
    match from_env() {
        Some(p) => non_empty(p),
        None => non_empty(prompt(&format!("Password for {}: ", keystore.display()))?),
    }
}
