use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lieq_core::LieType;

mod commands;
mod emit;
mod error;
mod problem;
mod reproduce;

use commands::{Module, Output, Overrides, Table};
use error::{CliResult, EXIT_MISMATCH};
use problem::Format;

/// Ext quivers, relation dimensions and graded characters for current algebras.
#[derive(Parser)]
#[command(name = "lieq", version, about)]
struct Args {
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Largest degree of S^(k)(g) to compute (default: grade span of Γ).
    #[arg(long, global = true)]
    max_degree: Option<usize>,

    #[arg(long, global = true)]
    allow_non_interval_closed: bool,

    /// Worker threads for the kernel. Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the points of Γ (an interval, or the interval closure of a point list).
    Interval {
        /// Spec file; standard input when omitted or `-`.
        spec: Option<PathBuf>,
    },
    /// Emit the Ext quiver Q(Γ).
    Quiver { spec: Option<PathBuf> },
    /// Pairwise tables over Γ.
    Tables {
        #[arg(value_enum)]
        which: Table,
        spec: Option<PathBuf>,
    },
    /// Irreducible decomposition of a module.
    Decompose {
        #[arg(long, value_parser = parse_lie)]
        lie: LieType,
        #[command(subcommand)]
        module: Module,
    },
    /// Check a fixed configuration against embedded expected values.
    Reproduce {
        #[arg(value_enum)]
        target: reproduce::Target,
    },
}

fn parse_lie(s: &str) -> Result<LieType, String> {
    s.parse().map_err(|e: lieq_core::Error| e.to_string())
}

fn run(args: &Args) -> CliResult<Output> {
    let ov = Overrides {
        format: args.format,
        max_degree: args.max_degree,
        allow_non_closed: args.allow_non_interval_closed,
    };
    match &args.command {
        Command::Interval { spec } => commands::interval(&problem::load(spec.as_deref())?, ov),
        Command::Quiver { spec } => commands::quiver(&problem::load(spec.as_deref())?, ov),
        Command::Tables { which, spec } => {
            commands::tables(&problem::load(spec.as_deref())?, *which, ov)
        }
        Command::Decompose { lie, module } => commands::decompose(*lie, module, ov),
        Command::Reproduce { target } => reproduce::run(*target),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Some(n) = args.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("warning: --threads ignored: {e}");
        }
    }
    match run(&args) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            eprint!("{}", out.stderr);
            if out.mismatches > 0 {
                ExitCode::from(EXIT_MISMATCH)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
