mod args;
mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use garside_core::error::Error;

use args::Cli;

/// 0 success, 1 mismatch or negative verdict, 2 usage, 3 cap exceeded,
/// 4 invariant violation.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        e if e.is_invariant_violation() => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !cli.system.is_given() && !matches!(cli.command, args::Command::Report { preset: Some(_) }) {
        eprintln!("error: give --type or --matrix");
        return ExitCode::from(2);
    }
    match commands::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
