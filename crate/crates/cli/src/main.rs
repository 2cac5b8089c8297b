use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use germs_cli::{run, Command};

/// Invariants of plane curve germs and corank-one map germs from the plane to space.
#[derive(Parser)]
#[command(name = "germs", version)]
struct Cli {
    /// Emit the structured JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli.command);
    if cli.json {
        print!("{}", report.render_json());
    } else {
        match report.render_text() {
            Ok(text) => print!("{text}"),
            Err(e) => eprint!("{e}"),
        }
    }
    let _ = std::io::stdout().flush();
    ExitCode::from(report.exit_code() as u8)
}
