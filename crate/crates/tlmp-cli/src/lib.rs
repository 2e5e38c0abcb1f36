//! JSON bundles, reports and the `tlmp` command line for `tlmp-core`.
//!
//! [`run`] executes a parsed command line and returns the rendered output
//! with its exit code: 0 when everything checked holds, 1 when an identity,
//! axiom or precondition fails (the output names the failing label and a
//! witness), and 2 for malformed input or I/O errors. Output is
//! deterministic: the same inputs give byte-identical reports.

pub mod bundle;
pub mod cli;
pub mod commands;
pub mod error;
pub mod fixtures;
pub mod json;
pub mod render;

use serde_json::Value;

use crate::bundle::canonical;
use crate::cli::{Cli, Command, Format};
use crate::commands::{Options, Outcome, VerifyArgs};
use crate::error::CliResult;

/// The rendered result of one invocation.
#[derive(Clone, Debug)]
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
    pub doc: Value,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::Build { .. } => "build",
        Command::Cohomology { .. } => "cohomology",
        Command::Cocycle { .. } => "cocycle",
        Command::Wells { .. } => "wells",
        Command::Report { .. } => "report",
        Command::Fixtures { .. } => "fixtures",
    }
}

fn dispatch(cli: &Cli) -> CliResult<Outcome> {
    let opts = Options { basis: cli.basis, seed: cli.seed };
    match &cli.command {
        Command::Verify { what, target, pair, rep, ext, aut } => {
            commands::verify(VerifyArgs { what: *what, target, pair, rep, ext, aut })
        }
        Command::Build { what, pair, rep, cocycle, out } => {
            commands::build(*what, pair, rep.as_deref(), cocycle.as_deref(), out.as_deref())
        }
        Command::Cohomology { pair, rep, degree } => commands::cohomology(pair, rep, *degree, opts),
        Command::Cocycle { action, pair, rep, cochain, other } => {
            commands::cocycle(*action, pair, rep, cochain, other.as_deref())
        }
        Command::Wells { action, ext, aut, section, out } => {
            commands::wells(*action, ext, aut.as_deref(), section.as_deref(), out.as_deref())
        }
        Command::Report { what, count } => commands::report(*what, *count, opts),
        Command::Fixtures { out_dir } => commands::fixtures(out_dir),
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> RunOutput {
    let name = command_name(&cli.command);
    let outcome = dispatch(cli).unwrap_or_else(|e| Outcome::from_error(name, &e));
    let stdout = match cli.format {
        Format::Json => canonical(&outcome.doc),
        Format::Text => render::render_text(&outcome.doc),
    };
    let stderr = match outcome.doc.get("error").and_then(Value::as_str) {
        Some(msg) => format!("tlmp {name}: {msg}\n"),
        None => String::new(),
    };
    RunOutput { stdout, stderr, code: outcome.code, doc: outcome.doc }
}
