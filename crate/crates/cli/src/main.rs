use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hadamard_walk_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(&cli);
    if out.code == hadamard_walk_cli::EXIT_USAGE {
        eprint!("{}", out.text);
    } else {
        let mut stdout = std::io::stdout().lock();
        // a closed pipe is not worth a panic
        let _ = stdout.write_all(out.text.as_bytes());
    }
    ExitCode::from(out.code as u8)
}
