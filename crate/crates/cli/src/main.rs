use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use blossom_cli::{run_oracle, run_solve, run_verify};
use clap::{Parser, Subcommand};

/// Maximum cardinality matching in general graphs.
///
/// Graphs are read in the DIMACS edge format (`p edge N M`, `e u v`) with
/// 1-based vertex ids.
#[derive(Parser)]
#[command(name = "blossom", version)]
struct Cli {
    /// Reserved. The solver is deterministic, so this currently has no effect.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a maximum matching: prints `s <size>` and `m u v` lines.
    Solve {
        graph: PathBuf,
        /// Write a certificate of maximality to PATH.
        #[arg(long, value_name = "PATH")]
        certificate: Option<PathBuf>,
        /// Trace every search iteration on stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Check a matching file against a graph, and a certificate if given.
    Verify {
        graph: PathBuf,
        matching: PathBuf,
        certificate: Option<PathBuf>,
    },
    /// Maximum matching by exhaustive search (at most 16 vertices).
    Oracle { graph: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let _ = cli.seed;
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    let code = match cli.command {
        Command::Solve { graph, certificate, trace } => {
            run_solve(&graph, certificate.as_deref(), trace, &mut out, &mut err)
        }
        Command::Verify { graph, matching, certificate } => {
            run_verify(&graph, &matching, certificate.as_deref(), &mut out, &mut err)
        }
        Command::Oracle { graph } => run_oracle(&graph, &mut out, &mut err),
    };
    ExitCode::from(code)
}
