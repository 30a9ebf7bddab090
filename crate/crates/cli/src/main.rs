use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use certiroot_cli::args::{Cli, Format};
use certiroot_cli::run;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let record = e.record();
            let mut stderr = std::io::stderr().lock();
            match cli.format {
                Format::Json => {
                    let _ = writeln!(stderr, "{}", serde_json::to_string_pretty(&record).expect("records serialize"));
                }
                Format::Text => {
                    let _ = writeln!(stderr, "error[{}]: {}", record.error.kind, record.error.message);
                }
            }
            ExitCode::FAILURE
        }
    }
}
