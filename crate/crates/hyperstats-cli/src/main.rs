//! Command-line surface for the hyperstats library.
//!
//! Exit codes: 0 success, 2 validation/precondition failure, 3 enumeration
//! cap exceeded, 4 internal assertion (oracle or identity mismatch).
//! Errors are reported as one JSON object on stderr.

mod commands;
mod io;

use clap::{Parser, Subcommand};

/// Exact, asymptotic and sampled statistics of stub-matched random
/// hypergraphs with prescribed degree sequences.
#[derive(Parser)]
#[command(name = "hyperstats", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact expected statistics of a degree sequence file.
    Exact(commands::ExactArgs),
    /// Leading-order asymptotic statistics (uniform edge sizes only).
    Asymptotic(commands::AsymptoticArgs),
    /// Monte Carlo estimates by repeated stub matching.
    Sample(commands::SampleArgs),
    /// Compare exact theorems against brute-force matching enumeration.
    OracleCheck(commands::OracleCheckArgs),
    /// Randomized finite checks of the underlying summation identities.
    IdentityCheck(commands::IdentityCheckArgs),
    /// Exact-vs-asymptotic convergence sweep over an n ladder (CSV).
    Sweep(commands::SweepArgs),
    /// Generate a degree sequence file (regular, Poisson or Zipf degrees).
    GenDegrees(commands::GenDegreesArgs),
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Exact(args) => commands::cmd_exact(args),
        Command::Asymptotic(args) => commands::cmd_asymptotic(args),
        Command::Sample(args) => commands::cmd_sample(args),
        Command::OracleCheck(args) => commands::cmd_oracle_check(args),
        Command::IdentityCheck(args) => commands::cmd_identity_check(args),
        Command::Sweep(args) => commands::cmd_sweep(args),
        Command::GenDegrees(args) => commands::cmd_gen_degrees(args),
    };
    if let Err(err) = result {
        err.report();
        std::process::exit(err.code());
    }
}
