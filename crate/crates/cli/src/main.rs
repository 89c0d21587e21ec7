//! `cliquereconf`: build clique reconfiguration graphs, reconstruct `TS` from
//! `TJ`, and run structural checks on files or seeded random corpora.
//!
//! Exit status: 0 success, 1 a check failed (witness on stdout), 2 usage or
//! input error, 3 timeout (partial report on stdout).

mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_SEED: u64 = 0x5eed_c11c;

#[derive(Debug, Parser)]
#[command(name = "cliquereconf", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub limits: Limits,
}

#[derive(Debug, Clone, Args)]
pub struct Limits {
    /// Reject input graphs with more vertices than this.
    #[arg(long, global = true, default_value_t = 256)]
    pub max_vertices: usize,

    /// Abort after this many seconds with exit status 3.
    #[arg(long, global = true)]
    pub timeout: Option<f64>,

    /// Report `elapsed_ms` as 0 so that output is byte-identical across runs.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Ts,
    Tj,
    TarLower,
    TarUpper,
    Simplex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    RandomGnp,
    Planar,
    Bipartite,
    Trees,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a reconfiguration graph of the cliques of an input graph.
    Build {
        #[arg(long, value_enum)]
        rule: RuleArg,
        /// Clique size; required for every rule except `simplex`.
        #[arg(long)]
        k: Option<usize>,
        /// Edge-list file, or `-` for standard input.
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
    /// List cliques of an input graph as JSON.
    Cliques {
        #[arg(long = "in")]
        input: PathBuf,
        /// List all cliques of this size.
        #[arg(long, conflicts_with_all = ["maximum"])]
        k: Option<usize>,
        /// List one maximum clique instead of all maximal cliques.
        #[arg(long)]
        maximum: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Rebuild `TS_{k-1}(G)` up to isolated nodes from an unlabeled `TJ_k(G)`.
    Reconstruct {
        #[arg(long, required_unless_present = "verify")]
        k: Option<usize>,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        /// Treat the input as a base graph and check the whole round trip.
        #[arg(long, conflicts_with_all = ["k", "out"])]
        verify: bool,
    },
    /// Run one structural check on an input graph.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long = "in")]
        input: PathBuf,
        /// Check only this `k`; by default every meaningful `k` is checked.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Generate a seeded random corpus, optionally running a check on each graph.
    Corpus {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Edge probability for `random-gnp` and `bipartite`.
        #[arg(long, default_value_t = cliquereconf_core::corpus::DEFAULT_EDGE_PROBABILITY)]
        p: f64,
        #[arg(long)]
        theorem: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        /// Write each graph as an edge-list file into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Worker threads for checks; defaults to one per core.
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run::run(cli) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(run::Status::Usage as u8)
        }
    }
}
