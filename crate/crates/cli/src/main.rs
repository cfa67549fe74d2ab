use std::io::Read;
use std::process::ExitCode;

use clap::Parser;
use picard_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let input = || match &cli.input {
        Some(path) => std::fs::read_to_string(path),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    };
    let code = run(&cli, input, &mut std::io::stdout(), &mut std::io::stderr());
    ExitCode::from(code)
}
