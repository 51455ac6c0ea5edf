use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use hooklen::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let status = match cli.into_config() {
        Ok(config) => run(&config, &mut out),
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };
    if let Err(err) = out.flush() {
        eprintln!("error: {err}");
        return ExitCode::from(2);
    }
    ExitCode::from(status.code())
}
