use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use tlmp_cli::cli::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = tlmp_cli::run(&cli);
    // A closed stdout (e.g. piping into `head`) is not worth a panic.
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
