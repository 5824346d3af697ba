use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use shimura::curvedb::{resolve_db_path, CurveDb};
use shimura::pipeline::{self, VerificationReport, DEFAULT_MAX_PHI};
use shimura::Error;

/// Exact equations of genus-two Shimura curves and their Atkin-Lehner
/// quotients.
#[derive(Debug, Parser)]
#[command(name = "shimura", version)]
struct Cli {
    /// Curve database (flat file); defaults to ./data/curves.txt.
    #[arg(long, global = true, env = "SHIMURA_DB")]
    db: Option<PathBuf>,

    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Bound on phi(D) for the genus scan.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_PHI)]
    max_phi: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Genus-two curves X_D and quotients X_D/w_m.
    Enumerate,
    /// Genus and fixed points of X_D, or of X_D/w_m.
    Genus { d: u64, m: Option<u64> },
    /// Candidate models of X_D/w_m glued from elliptic curves of conductor D.
    Candidates { d: u64, m: u64 },
    /// Candidates of X_D/w_m with their sieve verdicts.
    Sieve { d: u64, m: u64 },
    /// Dual graph of the special fibre of X_D at p.
    Graph { d: u64, p: u64 },
    /// Recompute every reference table and compare.
    VerifyPaper,
}

fn load_db(cli: &Cli) -> Result<CurveDb, Error> {
    CurveDb::load(&resolve_db_path(cli.db.as_deref()))
}

fn run(cli: &Cli) -> Result<VerificationReport, Error> {
    match cli.command {
        Command::Enumerate => pipeline::cmd_enumerate(cli.max_phi),
        Command::Genus { d, m } => pipeline::cmd_genus(d, m),
        Command::Candidates { d, m } => pipeline::cmd_candidates(&load_db(cli)?, d, m),
        Command::Sieve { d, m } => pipeline::cmd_sieve(&load_db(cli)?, d, m),
        Command::Graph { d, p } => pipeline::cmd_graph(d, p),
        Command::VerifyPaper => pipeline::cmd_verify(&load_db(cli)?, cli.max_phi),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                println!("{report}");
            }
            if report.is_success() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
