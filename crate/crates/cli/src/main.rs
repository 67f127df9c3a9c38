use std::process::ExitCode;

use clap::Parser;

use cherednik_cli::{run, Cli, RunConfig};

fn main() -> ExitCode {
    let result = RunConfig::from_cli(Cli::parse()).and_then(|config| run(&config));
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
