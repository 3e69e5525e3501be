use clap::Parser;
use pseudosym_cli::{execute, Args};

fn main() -> std::process::ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::ExitCode::FAILURE
        }
    }
}
