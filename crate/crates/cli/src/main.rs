mod args;
mod commands;
mod failure;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Synth(c) => commands::synth(c),
        Command::Pipeline(c) => commands::pipeline(c),
        Command::Design(c) => commands::design(c),
        Command::Filter(c) => commands::filter(c),
        Command::Spectrum(c) => commands::spectrum(c),
        Command::Detect(c) => commands::detect(c),
        Command::Hrv(c) => commands::hrv(c),
        Command::Schema(c) => commands::schema(c),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{}", failure.to_json());
            ExitCode::from(failure.exit_code as u8)
        }
    }
}
