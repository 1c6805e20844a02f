use std::process::ExitCode;

use clap::Parser;
use motmass_cli::args::Cli;
use motmass_cli::{render_human, run, EXIT_INVALID_INPUT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command.into_command() {
        Ok(c) => c,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_INVALID_INPUT);
        }
    };
    let report = run(&command);
    for d in &report.diagnostics {
        eprintln!("{d}");
    }
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("reports serialize")
        );
    } else {
        print!("{}", render_human(&report));
    }
    ExitCode::from(report.exit_code)
}
