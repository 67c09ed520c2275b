use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod report;

use report::{CliError, Outcome};

#[derive(Parser, Debug)]
#[command(name = "mfa", version, about = "Exact computations in free metabelian anticommutative algebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Number of generators.
    #[arg(long, global = true, default_value_t = 3)]
    pub rank: usize,
    /// Ground field: `q` or `gf:P`.
    #[arg(long, global = true, default_value = "q")]
    pub field: String,
    #[arg(long, global = true, value_enum, default_value_t = Algebra::Metabelian)]
    pub algebra: Algebra,
    /// Degree bound for inversion and filtration searches.
    #[arg(long = "max-degree", global = true)]
    pub max_degree: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    Metabelian,
    Free,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    Sigma,
    Tau,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print an element in canonical form.
    Normalize { expr: String },
    /// Multiply two elements.
    Mul { left: String, right: String },
    /// Fox derivatives of an element.
    Fox { expr: String },
    /// List the basis monomials of a homogeneous component.
    Basis {
        #[arg(long)]
        degree: usize,
    },
    /// Jacobian matrix of a map.
    Jacobian { file: PathBuf },
    /// Composite `FIRST ∘ SECOND`.
    Compose { first: PathBuf, second: PathBuf },
    /// Apply a map to an element.
    Apply { file: PathBuf, expr: String },
    /// Invert an IA-endomorphism of the metabelian algebra.
    Invert { file: PathBuf },
    /// Check whether `x_k ↦ x_k + f` is a Chein automorphism.
    CheinCheck {
        #[arg(short = 'f', long = "f")]
        f: String,
        #[arg(long, default_value_t = 1)]
        position: usize,
    },
    /// IA filtration level of a metabelian endomorphism.
    IaLevel { file: PathBuf },
    /// IE filtration level of a free-algebra endomorphism.
    IeLevel { file: PathBuf },
    /// Tangent derivation of a free-algebra endomorphism.
    Tangent { file: PathBuf },
    /// Divergence of a free-algebra derivation.
    Divergence { file: PathBuf },
    /// Induced endomorphism of the metabelian quotient.
    Quotient { file: PathBuf },
    /// Absolute wildness certificate for a free-algebra lift.
    WildCert {
        #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        builtin: Option<Builtin>,
    },
    /// Search for nontrivial IA-automorphisms in rank 2.
    Rank2Search {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        samples: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.global.format;
    let result: Result<Outcome, CliError> = commands::run(&cli.global, &cli.command);
    match result {
        Ok(out) => {
            print!("{}", out.render(format));
            ExitCode::from(out.exit)
        }
        Err(err) => {
            match format {
                Format::Human => eprintln!("error: {err}"),
                Format::Json => println!("{}", err.to_json()),
            }
            ExitCode::from(err.exit)
        }
    }
}
