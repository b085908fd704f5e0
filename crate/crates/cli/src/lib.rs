//! Command-line front end: single-semigroup reports, arbitrary dual
//! generators, and resumable JSONL sweeps.

pub mod analyze;
pub mod commands;
pub mod record;
pub mod render;
pub mod sweep;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use analyze::{run_analyze, run_from_dual, AnalyzeOptions, MethodChoice};
pub use record::{ReportRecord, SCHEMA_VERSION};
pub use sweep::{run_sweep, SweepSummary};

/// Bad user input that is not a core error (paths, flags).
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct InputError(pub String);

pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INAPPLICABLE: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;

/// Exit status for a failed command: 2 input, 3 inapplicable analysis, 4
/// internal limit, 1 anything else.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    use apery_core::Error as E;
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<E>() {
            return match e {
                E::NotGorenstein | E::NotGorensteinAtStep(_) | E::NotApplicable(_) | E::NotCi => {
                    EXIT_INAPPLICABLE
                }
                E::SizeLimit(_) => EXIT_LIMIT,
                E::EmptyInput
                | E::ZeroGenerator
                | E::GcdNotOne(_)
                | E::NotInSemigroup(_)
                | E::Parse(_)
                | E::NotHomogeneous
                | E::InvalidSeed(_)
                | E::InvalidConfig(_)
                | E::DegreeOutOfRange(_)
                | E::DegreeTooSmall(_)
                | E::VariableMismatch
                | E::NoSuchVariable(_)
                | E::BasisSize { .. } => EXIT_INPUT,
                _ => 1,
            };
        }
        if cause.is::<InputError>() || cause.is::<std::io::Error>() {
            return EXIT_INPUT;
        }
    }
    1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "apery",
    version,
    about = "Lefschetz properties of Apéry-set algebras of numerical semigroups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GensArg {
    /// Generators, comma-separated (e.g. 16,18,21,27).
    #[arg(long, value_name = "a,b,c[,d...]")]
    pub gens: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report for one semigroup.
    Analyze {
        #[command(flatten)]
        gens: GensArg,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodChoice,
        /// Include per-stage wall-clock timings (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Report for `Q/Ann(F)` with an arbitrary homogeneous `F`.
    FromDual {
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodChoice,
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Analyze a family of semigroups into a JSONL file.
    Sweep(SweepArgs),
    /// Apéry set with orders and maximal representations.
    Apery {
        #[command(flatten)]
        gens: GensArg,
        #[command(flatten)]
        common: Common,
    },
    /// Dual socle generator `F`.
    Dual {
        #[command(flatten)]
        gens: GensArg,
        #[command(flatten)]
        common: Common,
    },
    /// The (mixed) Hessian `Hess^{d,t}` of `F`.
    Hessian {
        #[arg(long, conflicts_with = "poly", required_unless_present = "poly")]
        gens: Option<String>,
        /// Use this polynomial instead of a semigroup's generator.
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        d: usize,
        /// Column degree (defaults to `d`).
        #[arg(long)]
        t: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Complete-intersection / codimension-3 classification and defining ideal.
    Classify {
        #[command(flatten)]
        gens: GensArg,
        #[command(flatten)]
        common: Common,
    },
    /// Quotient-condition construction and WLP transfer chain.
    QuotientChain {
        #[command(flatten)]
        gens: GensArg,
        #[command(flatten)]
        common: Common,
    },
    /// WLP of every `A/(0 : x_l)`.
    Conjecture {
        #[command(flatten)]
        gens: GensArg,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 2)]
    pub min_multiplicity: u64,
    #[arg(long)]
    pub max_multiplicity: u64,
    /// Largest generator value (default: twice the largest multiplicity).
    #[arg(long)]
    pub max_generator: Option<u64>,
    #[arg(long, default_value_t = 2)]
    pub min_gens: usize,
    #[arg(long, default_value_t = 4)]
    pub max_gens: usize,
    /// Keep only M-pure symmetric semigroups.
    #[arg(long)]
    pub require_m_pure: bool,
    /// Keep only complete intersections and 4-generated semigroups.
    #[arg(long)]
    pub require_ci_or_codim3: bool,
    /// Skip semigroups already present in `--out`.
    #[arg(long)]
    pub resume: bool,
    #[arg(long, value_enum, default_value = "both")]
    pub method: MethodChoice,
    #[arg(long)]
    pub timings: bool,
    /// JSONL output file (stdout if omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl SweepArgs {
    pub fn config(&self) -> apery_core::SweepConfig {
        let mut c = apery_core::SweepConfig::new(
            self.min_multiplicity..=self.max_multiplicity,
            self.max_generator.unwrap_or(2 * self.max_multiplicity),
            self.min_gens..=self.max_gens,
        );
        c.require_m_pure = self.require_m_pure;
        c.require_ci_or_codim3 = self.require_ci_or_codim3;
        c.output = self.out.clone();
        c.resume = self.resume;
        c
    }
}
