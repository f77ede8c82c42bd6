use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod cache;
mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "bcr",
    version,
    about = "Jacobi and BCR diagram computations with exact arithmetic"
)]
pub struct Cli {
    /// Largest degree any command may touch.
    #[arg(long, global = true, default_value_t = bcr_core::DEFAULT_MAX_DEGREE)]
    pub max_degree: usize,
    /// Worker threads (defaults to one per core).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List one diagram per isomorphism class.
    Enumerate {
        kind: DiagramKind,
        #[arg(long)]
        degree: usize,
        /// Jacobi only: keep connected diagrams.
        #[arg(long)]
        connected: bool,
        /// Jacobi only: keep diagrams whose every component has a univalent vertex.
        #[arg(long)]
        with_univalent: bool,
    },
    /// Dimension of the quotient space and of its parts.
    Dim {
        #[arg(long)]
        degree: usize,
    },
    /// Evaluate a Conway weight system on a Jacobi diagram file.
    Weight {
        #[arg(long, value_enum)]
        system: WeightSystem,
        #[arg(long)]
        diagram: PathBuf,
    },
    /// The BCR weight of a Jacobi diagram file.
    Wbcr {
        #[arg(long)]
        diagram: PathBuf,
        /// Sum over numbered triples using the file's edge numbers.
        #[arg(long)]
        numbered: bool,
        #[arg(long)]
        no_cache: bool,
    },
    /// Check an identity on every class of one degree.
    Verify {
        check: Check,
        #[arg(long)]
        degree: usize,
        /// Allow the expensive degree 4 runs.
        #[arg(long)]
        slow: bool,
        /// Recompute instead of reading cached weight tables.
        #[arg(long)]
        no_cache: bool,
    },
    /// Alexander polynomial of a PD code and its series in h.
    Alexander {
        /// PD code file.
        #[arg(long, conflicts_with = "knot", required_unless_present = "knot")]
        pd: Option<PathBuf>,
        /// Built-in knot name, e.g. 3_1.
        #[arg(long)]
        knot: Option<String>,
        /// Expand Delta(e^h) up to h^K.
        #[arg(long, value_name = "K")]
        series: Option<usize>,
        /// Also print Z_k = -[h^k] log Delta(e^h).
        #[arg(long)]
        zbcr: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramKind {
    Bcr,
    Jacobi,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightSystem {
    Wc,
    Wcp,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    /// w_BCR = -w'_C on every class.
    #[value(name = "prop32")]
    Main,
    /// STU and AS relations for w_BCR.
    Stu,
    /// w_C after edge substitution.
    Wcpsi,
    /// Wheel values and classes with too many trivalent vertices.
    #[value(name = "lemma33")]
    Wheels,
    /// Vanishing on products.
    #[value(name = "lemma35")]
    Products,
}

/// Outcome of a command.
pub enum Failure {
    /// Bad input or a refused request: exit 2.
    Usage(String),
    /// A verification found unequal values: exit 1.
    Verification,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
