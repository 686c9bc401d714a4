use std::io::Write;
use std::process::ExitCode;

use rephom_cli::{parse_args, run, EXIT_USAGE};

fn main() -> ExitCode {
    let request = match parse_args(std::env::args_os()) {
        Ok(r) => r,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(if code == 0 { 0 } else { EXIT_USAGE as u8 });
        }
    };
    let outcome = run(&request);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.exit_code as u8)
}
