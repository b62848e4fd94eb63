mod check;
mod dual;
mod fourier;
mod input;
mod padic;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

pub use input::CliError;

#[derive(Parser)]
#[command(name = "qfourier", version, about = "Exact Fourier analysis on finite quantum groups and on Q_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the dual quantum group and the pairing matrix.
    Dual(dual::DualArgs),
    /// Fourier transform of an element, a Schwartz function on Q_p, or an
    /// element of the Laurent pair.
    Fourier(fourier::FourierArgs),
    /// Run check suites and stream one JSON record per case.
    Check(check::CheckArgs),
    /// Evaluate p-adic expressions.
    Padic {
        #[command(subcommand)]
        command: padic::PadicCommand,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Dual(args) => dual::run(args),
        Command::Fourier(args) => fourier::run(args),
        Command::Check(args) => check::run(args),
        Command::Padic { command } => padic::run(command),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
