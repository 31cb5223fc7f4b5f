use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = tt_cli::app::Cli::parse();
    match tt_cli::app::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(tt_cli::app::Failure { output, error }) => {
            print!("{output}");
            eprintln!("error: {error}");
            ExitCode::from(error.exit_code() as u8)
        }
    }
}
