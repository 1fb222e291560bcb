//! `homcount`: batch front end over the homcount library.
//!
//! Graphs are read from a path or `-` (standard input) in the text or JSON format
//! of `homcount::graph::io`. Exit codes: 0 success, 1 domain rejection (with a
//! `reject <code>` line on standard error), 2 usage or input errors.

mod commands;
mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homcount::{Exec, Limits};
use output::{Failure, Format};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "homcount", version, about = "Exact homomorphism counting and reductions")]
pub struct Cli {
    /// Pattern budget for brute-force counting.
    #[arg(long, global = true, env = "HOMCOUNT_BUDGET")]
    pub budget: Option<usize>,
    /// Seed for fixture generation.
    #[arg(long, global = true, env = "HOMCOUNT_SEED", default_value_t = 0x5eed)]
    pub seed: u64,
    #[arg(long, global = true, env = "HOMCOUNT_FORMAT", value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, env = "HOMCOUNT_EXEC", value_enum, default_value_t = ExecArg::Parallel)]
    pub exec: ExecArg,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ExecArg {
    Parallel,
    Sequential,
}

impl Cli {
    pub fn limits(&self) -> Limits {
        let exec = match self.exec {
            ExecArg::Parallel => Exec::Parallel,
            ExecArg::Sequential => Exec::Sequential,
        };
        let mut limits = Limits::default().with_exec(exec);
        if let Some(b) = self.budget {
            limits.pattern_budget = b;
            limits.colored_pattern_budget = limits.colored_pattern_budget.max(b);
        }
        limits
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a graph.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Count maps or patterns from a pattern into a target.
    Count(CountArgs),
    /// Quantum graphs: basis changes, evaluation and constituent extraction.
    Quantum {
        #[command(subcommand)]
        what: QuantumCommand,
    },
    /// Line graph of the input.
    Line(InputArg),
    /// Root graph of a line graph.
    Root(InputArg),
    /// Whether the pattern maps into the line-graph target.
    DecideLineHom(PairArgs),
    /// Reductions and the universality encoding.
    Reduce {
        #[command(subcommand)]
        what: ReduceCommand,
    },
    /// A checkable proof that no homomorphism exists.
    Certify(CertifyArgs),
    /// Run the acceptance criteria.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// Kneser graph K(r, s).
    Kneser {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// The k × k grid.
    Grid {
        #[arg(long)]
        k: usize,
    },
    /// The crown grid on a k × k grid, optionally with a loop at every vertex.
    CrownGrid {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        looped: bool,
    },
    /// complete, path, cycle, star (with --n), petersen, grotzsch, chvatal.
    Named {
        name: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Path set encoding a bit string.
    String {
        #[arg(long)]
        x: String,
    },
    /// Member of a graph family.
    Member {
        #[arg(long, default_value = "toy")]
        family: String,
        #[arg(long)]
        index: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Hom,
    Emb,
    #[value(name = "stremb")]
    StrEmb,
    Aut,
    Cphom,
    Colorful,
    Sub,
    Indsub,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Backtracking search.
    Brute,
    /// Tree-decomposition dynamic program (hom only).
    Td,
    /// Inclusion–exclusion over deleted colors (colorful only).
    Ie,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Pattern graph; for cphom and colorful it defaults to the target bundle's second graph.
    #[arg(long)]
    pub pattern: Option<PathBuf>,
    /// Target graph or bundle (graph, pattern, coloring).
    #[arg(long)]
    pub target: Option<PathBuf>,
    /// Coloring of the target; defaults to the target bundle's coloring.
    #[arg(long)]
    pub coloring: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Method::Brute)]
    pub method: Method,
}

#[derive(Args, Debug)]
pub struct InputArg {
    #[arg(long, default_value = "-")]
    pub input: PathBuf,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long)]
    pub pattern: PathBuf,
    #[arg(long)]
    pub target: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SpeciesArg {
    Hom,
    Emb,
    #[value(name = "stremb")]
    StrEmb,
}

#[derive(Subcommand, Debug)]
pub enum QuantumCommand {
    /// Sub(H) written over homomorphism counts.
    SubToHom {
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Line-pattern quantum graph of H.
    LinePattern {
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Rewrite a quantum graph in another species.
    Transform {
        #[arg(long, default_value = "-")]
        input: PathBuf,
        #[arg(long, value_enum)]
        from: SpeciesArg,
        #[arg(long, value_enum)]
        to: SpeciesArg,
    },
    /// Σ λ · #Hom(·, G).
    Eval {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        target: PathBuf,
    },
    /// Recover every constituent count from evaluations on tensor products.
    Extract {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        target: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum ReduceCommand {
    /// Connected graph with the same k-clique count.
    Connectify {
        #[arg(long, default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Graph colored into the k × k grid (target, grid, coloring).
    Cpgrid {
        #[arg(long, default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Crown of the grid-colored instance (crown, looped crown grid, coloring).
    Crown {
        #[arg(long, default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// Also emit the bipartite root of the crown.
        #[arg(long)]
        witness: bool,
    },
    /// Number of k-cliques through the crown chain.
    Clique {
        #[arg(long, default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// Count by inclusion–exclusion instead of direct color-prescribed search.
        #[arg(long)]
        incl_excl: bool,
        /// Give up on inclusion–exclusion after this many seconds.
        #[arg(long)]
        deadline_secs: Option<u64>,
    },
    /// Encode a bit string with the tensor toy source.
    Encode {
        #[arg(long)]
        x: String,
        #[arg(long, default_value = "toy")]
        family: String,
    },
    /// Decode an encoded pair (pattern, target).
    Decode {
        #[arg(long, default_value = "-")]
        input: PathBuf,
        #[arg(long, default_value = "toy")]
        family: String,
        /// Also compute the homomorphism count through the toy answer.
        #[arg(long)]
        count: bool,
    },
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[arg(long)]
    pub pattern: PathBuf,
    #[arg(long)]
    pub target: PathBuf,
    /// Trusted lower bound on the chromatic number of the pattern.
    #[arg(long)]
    pub chi_lower: Option<usize>,
    /// The target is vertex-transitive.
    #[arg(long)]
    pub transitive: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Criteria to run; all when omitted.
    #[arg(long = "criterion", value_parser = clap::value_parser!(u8).range(1..=13))]
    pub criteria: Vec<u8>,
    /// Allowance for the inclusion–exclusion chain of criterion 8.
    #[arg(long)]
    pub chain_deadline_secs: Option<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.render(cli.format));
            ExitCode::from(match f {
                Failure::Reject { .. } => 1,
                Failure::Usage(_) => 2,
            })
        }
    }
}
