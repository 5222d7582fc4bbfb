use std::process::ExitCode;

use clap::Parser;

use ncatalan_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = e.exit_code() as u8;
            match e {
                CliError::Failed(out) => println!("{out}"),
                CliError::Usage(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(code)
        }
    }
}
