//! `k3-quartic-lab`: runs the analyses and verification suites of the
//! `k3-quartic` crate and prints a report with a verification ledger.
//!
//! Exit codes: 0 when every ledger entry passes, 1 on a verification
//! failure or computation error, 2 on a usage error.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::report::{CliError, Report};

#[derive(Parser, Debug)]
#[command(name = "k3-quartic-lab", version, about = "Exact verification for K3 covers of five-nodal quartics")]
struct Cli {
    /// Print the full report as JSON instead of a summary.
    #[arg(long, global = true)]
    json: bool,

    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    report: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stability, nodes, fiber table and Picard bounds for one alpha.
    Analyze {
        /// `p/q`, an integer, or `inf`.
        #[arg(value_name = "ALPHA")]
        alpha_pos: Option<String>,
        #[arg(long)]
        alpha: Option<String>,
        /// Mordell-Weil rank used in the Shioda-Tate bound.
        #[arg(long, default_value_t = 0)]
        mw_rank: u32,
    },
    /// Kodaira fiber table; the generic table over Q(alpha) without --alpha.
    Fibers {
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, default_value_t = 0)]
        mw_rank: u32,
    },
    /// Lattice invariants and transcendental lattice realizations.
    Lattice {
        #[command(subcommand)]
        command: LatticeCommand,
    },
    /// Fourth-power test of the branch quartic along a rational curve.
    Split {
        #[arg(long)]
        alpha: String,
        /// JSON file `{x: [[e, c], ...], y: ..., z: ...}`.
        #[arg(long, value_name = "FILE")]
        param: PathBuf,
    },
    /// Period ratio, j-invariant and CM detection for E_beta.
    Cm {
        #[arg(long)]
        beta4: String,
        #[arg(long, default_value_t = 128)]
        precision: usize,
    },
    /// Modular group checks.
    Moduli {
        #[arg(long, default_value = "all", value_parser = ["all", "fricke", "cayley", "period"])]
        check: String,
    },
    /// Runs a named verification suite, or all of them.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand, Debug)]
enum LatticeCommand {
    /// Invariants of a preset (`N`, `T`) or a sum such as `U+E7+A1(-1)`.
    Invariants {
        #[arg(long)]
        preset: String,
    },
    /// Realization of `T_n = diag(2n, 2n)` inside `diag(2, 2, -2, -2)`.
    Tn {
        #[arg(long)]
        n: i64,
    },
}

fn dispatch(cmd: Command) -> Result<Report, CliError> {
    match cmd {
        Command::Analyze { alpha_pos, alpha, mw_rank } => {
            let a = match (alpha_pos, alpha) {
                (Some(a), None) | (None, Some(a)) => a,
                (Some(_), Some(_)) => return Err(CliError::Usage("give alpha once".into())),
                (None, None) => return Err(CliError::Usage("alpha is required".into())),
            };
            commands::analyze(&a, mw_rank)
        }
        Command::Fibers { alpha, mw_rank } => commands::fibers(alpha.as_deref(), mw_rank),
        Command::Lattice { command: LatticeCommand::Invariants { preset } } => commands::lattice_invariants(&preset),
        Command::Lattice { command: LatticeCommand::Tn { n } } => commands::lattice_tn(n),
        Command::Split { alpha, param } => commands::split(&alpha, &param),
        Command::Cm { beta4, precision } => commands::cm(&beta4, precision),
        Command::Moduli { check } => commands::moduli(&check),
        Command::Verify { suite } => commands::verify(&suite),
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let report = match dispatch(cli.command) {
        Ok(r) => r.with_command(args),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let json = report.to_json();
    if let Some(path) = &cli.report {
        let text = serde_json::to_string_pretty(&json).expect("serializable") + "\n";
        if let Err(e) = std::fs::write(path, text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&json).expect("serializable"));
    } else {
        print!("{}", report.summary());
    }
    ExitCode::from(if report.all_pass() { 0 } else { 1 })
}
