//! `tdtc`: compute, verify, sweep, ratio and export for total dominator
//! (total) colorings.
//!
//! Exit codes: 0 ok, 1 verification or agreement failure, 2 parse error,
//! 3 domain error, 4 budget exhausted.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod exit;
mod invariant;
mod source;

#[derive(Parser, Debug)]
#[command(name = "tdtc", version, about = "Total dominator (total) colorings of small graphs, cycles and paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one invariant exactly.
    Compute(commands::compute::ComputeArgs),
    /// Check a certificate file against a graph.
    Verify(commands::verify::VerifyArgs),
    /// Compare formulas with solvers and certificates over a range of n.
    Sweep(commands::sweep::SweepArgs),
    /// Tabulate chi_tt_d / chi_t_d over a range of n.
    Ratio(commands::ratio::RatioArgs),
    /// Write graphs, total graphs, label maps or certificates.
    Export(commands::export::ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
    Edges,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::PARSE } else { exit::OK });
        }
    };
    let result = match cli.command {
        Command::Compute(a) => commands::compute::run(a),
        Command::Verify(a) => commands::verify::run(a),
        Command::Sweep(a) => commands::sweep::run(a),
        Command::Ratio(a) => commands::ratio::run(a),
        Command::Export(a) => commands::export::run(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
