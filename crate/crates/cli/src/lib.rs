//! Command-line front end for the `weingarten` library.
//!
//! Exit codes: 0 success, 1 verification failed, 2 bad input, 3 singular
//! evaluation.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod format;
pub mod scene;
pub mod verify;

use std::ffi::OsString;

use clap::Parser;

use args::{Cli, Command};
use config::SceneConfig;
use error::CliResult;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;

fn dispatch(cli: &Cli) -> CliResult<i32> {
    let cfg = SceneConfig::load(cli.config.as_deref())?;
    match &cli.command {
        Command::Profile(a) => commands::profile(a, &cfg)?,
        Command::Surface(a) => commands::surface(a, &cfg)?,
        Command::Classify(a) => commands::classify_cmd(a, &cfg)?,
        Command::Parallel(a) => commands::parallel(a, &cfg)?,
        Command::Hyperbolic(a) => commands::hyperbolic(a, &cfg)?,
        Command::Verify(a) => {
            let target = a.target.or(cfg.target).unwrap_or(args::TargetArg::All);
            let tol = verify::resolve_tolerance(a.tol.or(cfg.tol))?;
            let mut checks = verify::run_target(target, a.p.or(cfg.p))?;
            verify::override_tolerance(&mut checks, tol);
            let report = verify::report(target, tol, &checks);
            commands::emit(
                a.output.as_deref().or(cfg.output.as_deref()),
                &commands::json_text(&report),
            )?;
            if !checks.iter().all(verify::Check::passed) {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
