//! The `disco` command line: score a labeling, sweep clusterer parameters,
//! and run ablation ramps.
//!
//! Summaries are printed as `key=value` lines; tables are CSV with values
//! rounded to six significant digits. Set `DISCO_THREADS` to cap the worker
//! pool.

use std::ffi::OsString;

use clap::Parser;

pub mod ablate_cmd;
pub mod args;
mod error;
pub mod input;
mod output;
pub mod score_cmd;
pub mod sweep_cmd;

pub use args::{Cli, Command};
pub use error::{CliError, Result};

fn init_threads() -> Result<()> {
    let Ok(value) = std::env::var("DISCO_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| {
            CliError::Usage(format!(
                "DISCO_THREADS must be a positive integer, got {value:?}"
            ))
        })?;
    // A pool that already exists (e.g. in tests) is left alone.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

pub fn execute(cli: &Cli) -> Result<()> {
    init_threads()?;
    match &cli.command {
        Command::Score(a) => score_cmd::cmd_score(a),
        Command::Sweep(a) => sweep_cmd::cmd_sweep(a),
        Command::Ablate(a) => ablate_cmd::cmd_ablate(a),
    }
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .try_init();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            let message = e.to_string();
            eprintln!("error: {message}");
            let mut source = std::error::Error::source(&e);
            while let Some(s) = source {
                let cause = s.to_string();
                if !message.contains(&cause) {
                    eprintln!("  caused by: {cause}");
                }
                source = s.source();
            }
            e.exit_code()
        }
    }
}
