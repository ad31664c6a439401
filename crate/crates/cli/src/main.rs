use std::process::ExitCode;

use canal_cli::{execute, Args};
use clap::Parser;

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("canal: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
