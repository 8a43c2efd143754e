use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use gbott_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out: Box<dyn Write> = match &cli.common.out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("gbott: cannot create {}: {e}", path.display());
                return ExitCode::from(1);
            }
        },
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let result = run(&cli, out.as_mut()).and_then(|o| {
        out.flush()?;
        Ok(o)
    });
    match result {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        Err(CliError::Usage(msg)) => {
            eprintln!("gbott: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("gbott: {e}");
            ExitCode::from(1)
        }
    }
}
