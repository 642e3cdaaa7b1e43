mod cli;
mod commands;
mod error;
mod files;
mod password;

use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Command};
use error::{Result, EXIT_GENERIC};

fn run(cli: Cli) -> Result<()> {
    let keystore = match cli.keystore {
        Some(path) => path,
        None => files::default_keystore()?,
    };
    match cli.command {
        Command::Keygen {
            name,
            out,
            kdf_profile,
            force,
        } => commands::keygen(out.unwrap_or(keystore), &name, kdf_profile, force),
        Command::Info { descriptor } => commands::info(&descriptor),
        Command::Create {
            out,
            recipients,
            add_self,
            input,
            suite,
            write,
            force,
        } => commands::create(
            &keystore,
            &out,
            &recipients,
            add_self,
            input.as_deref(),
            suite,
            &write,
            force,
        ),
        Command::Extract {
            container,
            out,
            load,
            force,
        } => commands::extract(&keystore, &container, out.as_deref(), &load, force),
        Command::Update {
            container,
            input,
            load,
            write,
        } => commands::update(&keystore, &container, input.as_deref(), &load, &write),
        Command::Recipients { action } => commands::recipients(&keystore, action),
        Command::Inspect { container } => commands::inspect(&container),
        Command::BenchKdf { kdf_profile } => commands::bench_kdf(kdf_profile),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // usage errors exit 1; code 2 is reserved for IO failures
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_GENERIC)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("ecf: {failure}");
            failure.exit_code()
        }
    }
}
