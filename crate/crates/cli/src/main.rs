use std::process::ExitCode;

use clap::Parser;
use halin_cli::{run_cli, CliConfig};

fn main() -> ExitCode {
    let config = CliConfig::parse();
    let code = run_cli(config, &mut std::io::stdout().lock());
    ExitCode::from(code as u8)
}
