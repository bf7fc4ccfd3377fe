mod args;
mod commands;
mod output;
mod reproduce;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use output::Outcome;

/// Exit status for invalid input (files, expressions, flags).
pub const EXIT_USAGE: u8 = 2;

/// Marks an error as caused by the user's input rather than the computation.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn init_threads() {
    if let Some(n) = std::env::var("LINDEF_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // a second initialisation only happens in tests; ignore it
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_threads();
    let result = match &cli.command {
        Command::Build(a) => commands::build(&cli, a),
        Command::Hilbert(a) => commands::hilbert(&cli, a),
        Command::Obstruction(a) => commands::obstruction(&cli, a),
        Command::Colon(a) => commands::colon(&cli, a),
        Command::Resolve(a) => commands::resolve(&cli, a),
        Command::Linpart(a) => commands::linpart(&cli, a),
        Command::Certify(a) => commands::certify(&cli, a),
        Command::Search(a) => commands::search(&cli, a),
        Command::Reproduce(a) => reproduce::run(&cli, a),
    };
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage = e.chain().any(|c| c.is::<UsageError>() || c.is::<lindef_core::Error>() && is_input_error(c));
            ExitCode::from(if usage { EXIT_USAGE } else { 1 })
        }
    }
}

fn is_input_error(e: &(dyn std::error::Error + 'static)) -> bool {
    use lindef_core::Error;
    matches!(
        e.downcast_ref::<Error>(),
        Some(Error::Parse { .. } | Error::NotHomogeneous(_) | Error::Invalid(_) | Error::DimensionMismatch { .. })
    )
}
