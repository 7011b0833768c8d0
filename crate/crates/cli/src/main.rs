use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use phaseless_cli::{run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let result = run(&config).and_then(|out| {
        match &config.output {
            Some(path) => std::fs::write(path, &out.stdout),
            None => std::io::stdout().write_all(out.stdout.as_bytes()),
        }
        .map_err(|e| phaseless_cli::CliError::Io(e.to_string()))?;
        if let (Some(path), Some(csv)) = (&config.csv, &out.csv) {
            std::fs::write(path, csv).map_err(|e| phaseless_cli::CliError::Io(e.to_string()))?;
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
