use std::process::ExitCode;

use clap::Parser;
use gotzmann::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.verb, std::io::stdin().lock()) {
        Ok(report) => {
            print!("{}", report.render(cli.json));
            if cli.json {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
