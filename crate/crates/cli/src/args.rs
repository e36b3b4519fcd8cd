use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use k3fix::catalog::K3_TOTIENT_CAP;

#[derive(Parser, Debug)]
#[command(
    name = "k3fix",
    version,
    about = "Exact holomorphic Lefschetz analysis of finite order automorphisms of K3 surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct Target {
    /// Order N of the automorphism.
    #[arg(long)]
    pub order: u64,
    /// Rotation r: the automorphism acts on the 2-form by ζ^r.
    #[arg(long, default_value_t = 1)]
    pub rot: u64,
    /// Accept rotations with 1 < gcd(r, N) < N.
    #[arg(long)]
    pub allow_impure: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Orders I with φ(I) <= K, grouped by totient value.
    Orders {
        #[arg(long, default_value_t = K3_TOTIENT_CAP)]
        max_phi: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Dump the linear system for (N, r).
    System {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        output: Output,
    },
    /// Decide integer feasibility of the system for (N, r).
    Analyze {
        /// Order N of the automorphism.
        #[arg(long, required_unless_present_any = ["all", "input"], conflicts_with_all = ["all", "input"])]
        order: Option<u64>,
        #[arg(long, default_value_t = 1)]
        rot: u64,
        #[arg(long)]
        allow_impure: bool,
        /// Sweep every admissible order with φ(N) <= --max-phi.
        #[arg(long, conflicts_with = "input")]
        all: bool,
        #[arg(long, default_value_t = K3_TOTIENT_CAP, requires = "all")]
        max_phi: u64,
        /// Analyze a system previously written by `system --format json`.
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluate the Lefschetz formula on explicit fixed-point data.
    Verify {
        #[command(flatten)]
        target: Target,
        /// Isolated points as "a,b:count[;a,b:count]...".
        #[arg(long, default_value = "")]
        points: String,
        /// n = Σ (1 - g(C)) over the fixed curves.
        #[arg(long, allow_hyphen_values = true)]
        curve_n: Option<i64>,
        #[command(flatten)]
        output: Output,
    },
    /// Enumerate nonnegative solutions with at most B isolated points.
    Search {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        max_points: u64,
        #[arg(long, default_value_t = -10, allow_hyphen_values = true)]
        n_min: i64,
        #[arg(long, default_value_t = 10, allow_hyphen_values = true)]
        n_max: i64,
        #[command(flatten)]
        output: Output,
    },
    /// End-to-end reproduction of the order 60 impossibility result.
    CheckPaper {
        #[command(flatten)]
        output: Output,
    },
}
