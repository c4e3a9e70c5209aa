use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use hopfcenter_cli::{run, Cli};

fn main() -> ExitCode {
    let outcome = run(Cli::parse());
    print!("{}", outcome.stdout);
    if !outcome.stderr.is_empty() {
        eprintln!("{}", outcome.stderr);
    }
    std::io::stdout().flush().ok();
    ExitCode::from(outcome.code as u8)
}
