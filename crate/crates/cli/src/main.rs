use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use vogel::commands::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let start = Instant::now();
    match run(&cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.as_bytes());
            eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
