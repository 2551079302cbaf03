use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use selfpure::cli::{execute, render, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, code) = execute(&cli);
    let out = render(&cli, &report);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(code)
}
