macro_rules! outln {
    ($($arg:tt)*) => {
        $crate::emit(format_args!("{}\n", format_args!($($arg)*)))
    };
}

macro_rules! out {
    ($($arg:tt)*) => {
        $crate::emit(format_args!($($arg)*))
    };
}

mod commands;
mod report;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use ncdecomp::{RuleSetId, Theorem};

#[derive(Debug, Parser)]
#[command(name = "ncdecomp", version, about = "(d,h)-decompositions of graphs on nonnegative-characteristic surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Oracle,
    Reduce(Theorem),
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "oracle" => Ok(Method::Oracle),
            _ => s
                .strip_prefix("reduce:")
                .and_then(|t| t.parse().ok())
                .map(Method::Reduce)
                .ok_or_else(|| format!("unknown method `{s}` (expected oracle, reduce:T0 or reduce:T1)")),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Embedding summary, cycle structure and class membership.
    Analyze {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Builds a (d,h)-decomposition and writes it in the DECOMP format.
    Decompose {
        graph: PathBuf,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        h: Option<usize>,
        #[arg(long, default_value = "oracle")]
        method: Method,
        /// Graphs with at most this many vertices go straight to the oracle.
        #[arg(long, default_value_t = 10)]
        threshold: usize,
        /// Writes the reduction trace as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Checks a DECOMP file against a graph.
    Verify {
        graph: PathBuf,
        decomposition: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Runs a discharging rule set and audits the final charges.
    Discharge {
        graph: PathBuf,
        #[arg(long)]
        ruleset: RuleSetId,
        #[arg(long)]
        json: bool,
    },
    /// Writes a generated instance in the ROTSYS format, e.g. `gen toroidal_grid 3 3`.
    Gen {
        kind: String,
        params: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Writes to stdout; a reader that went away ends the process quietly.
pub fn emit(args: std::fmt::Arguments) {
    if let Err(e) = io::stdout().lock().write_fmt(args) {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write to stdout: {e}");
        std::process::exit(2);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { graph, json } => commands::analyze(&graph, json),
        Command::Decompose { graph, d, h, method, threshold, trace, out, json } => {
            commands::decompose(commands::DecomposeArgs { graph, d, h, method, threshold, trace, out, json })
        }
        Command::Verify { graph, decomposition, json } => commands::verify(&graph, &decomposition, json),
        Command::Discharge { graph, ruleset, json } => commands::discharge(&graph, ruleset, json),
        Command::Gen { kind, params, out } => commands::gen(&kind, &params, out.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {:#}", failure.error);
            ExitCode::from(failure.code)
        }
    }
}
