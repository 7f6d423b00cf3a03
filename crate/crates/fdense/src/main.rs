use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use fdense::cli::{run, Cli};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let echo = args.join(" ");
    match run(&cli, &echo) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("fdense: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
