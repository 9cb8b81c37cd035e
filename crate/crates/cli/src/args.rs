use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "supergroup", version, about = "Supergroup integrals: evaluators and verification suites")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Working precision in bits (at least 64).
    #[arg(long, global = true, env = "SUPERGROUP_PREC_BITS")]
    pub prec_bits: Option<u32>,

    /// Maximum number of series terms before giving up.
    #[arg(long, global = true)]
    pub trunc_cap: Option<usize>,

    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Worker threads; results do not depend on it.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,

    /// JSON file with defaults for `prec_bits`, `trunc_cap` and `seed`.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub json_out: Option<PathBuf>,

    /// Add wall-clock time to the report (makes it non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// JSON input file.
    #[arg(long, conflicts_with = "json")]
    pub input: Option<PathBuf>,

    /// Inline JSON input.
    #[arg(long)]
    pub json: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the single-matrix integral for given eigenvalues.
    LsEval(InputArgs),

    /// Evaluate the two-matrix integral; input is `{"lambda": …, "mu": …}`.
    BkEval(InputArgs),

    /// Compare the truncated J₀ and J_m series on seeded points.
    ConjectureVerify {
        #[arg(long = "N")]
        n: usize,
        /// Bosonic block size; every m in 1..=N when omitted.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 2)]
        radius: u32,
        /// Truncation depth K of each index.
        #[arg(long, default_value_t = 64)]
        depth: usize,
        #[arg(long, default_value_t = supergroup::conjecture::DEFAULT_MAX_N)]
        max_n: usize,
    },

    /// Exact Littlewood-Richardson relation between f and g coefficients.
    LrCheck {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        max_boxes: usize,
    },

    /// Exact power-sum expansion of the supertrace.
    StrninxiCheck {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_boxes: usize,
        #[command(flatten)]
        input: InputArgs,
    },

    /// Brute-force Grassmann integration against the closed form.
    #[command(name = "appendix-e-verify")]
    BruteForceVerify {
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        samples: u64,
    },

    /// Determinant theorems behind the series manipulations.
    TheoremsCheck {
        /// Number of variables; 1..=6 when omitted.
        #[arg(long = "N")]
        n: Option<usize>,
    },

    /// Run the acceptance suite and print a per-criterion table.
    Selftest,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::LsEval(_) => "ls-eval",
            Command::BkEval(_) => "bk-eval",
            Command::ConjectureVerify { .. } => "conjecture-verify",
            Command::LrCheck { .. } => "lr-check",
            Command::StrninxiCheck { .. } => "strninxi-check",
            Command::BruteForceVerify { .. } => "appendix-e-verify",
            Command::TheoremsCheck { .. } => "theorems-check",
            Command::Selftest => "selftest",
        }
    }
}
