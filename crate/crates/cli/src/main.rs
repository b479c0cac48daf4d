mod args;
mod commands;
mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match &cli.command {
        Command::Parse(a) => commands::parse(a),
        Command::Table(a) => commands::table(a),
        Command::Check(a) => commands::check(a),
        Command::Eval(a) => commands::eval(a),
        Command::Diff(a) => commands::diff(a),
        Command::Matrices(a) => commands::matrices(a),
    };
    match report {
        Ok(report) => {
            if !cli.quiet {
                let mut out = io::stdout().lock();
                if let Err(e) = report.write(cli.format, &mut out).and_then(|_| out.flush()) {
                    if e.kind() != io::ErrorKind::BrokenPipe {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                }
            }
            ExitCode::from(report.exit_code)
        }
        Err(commands::CliError(message)) => {
            if !cli.quiet {
                eprintln!("error: {message}");
            }
            ExitCode::from(2)
        }
    }
}
