use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "certiroot", version, about = "Certified real-root enumeration for approximately known polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate candidates for every real root.
    Roots(RootsArgs),
    /// Enumerate candidates for the intersections of two graphs.
    Intersect(IntersectArgs),
    /// Print the Sturm chain and exact root counts on half-open intervals (lo, hi].
    Sturm(SturmArgs),
    /// Evaluate the error bounds at a point.
    Bounds(BoundsArgs),
    /// Interleave bit sources along a stage schedule.
    Spectrum(SpectrumArgs),
}

#[derive(Debug, Args)]
pub struct Precision {
    /// Roots are located to within 2^-r.
    #[arg(long, short = 'r', value_parser = clap::value_parser!(u32).range(1..))]
    pub precision: u32,
    /// Small-value threshold γ as "n" or "n/d".
    #[arg(long, allow_hyphen_values = true)]
    pub threshold: Option<String>,
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    #[arg(long)]
    pub poly: PathBuf,
    #[command(flatten)]
    pub precision: Precision,
}

#[derive(Debug, Args)]
pub struct IntersectArgs {
    #[arg(long)]
    pub a: PathBuf,
    #[arg(long)]
    pub b: PathBuf,
    #[command(flatten)]
    pub precision: Precision,
}

#[derive(Debug, Args)]
pub struct SturmArgs {
    #[arg(long)]
    pub poly: PathBuf,
    /// Interval endpoints; repeatable.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_hyphen_values = true, action = clap::ArgAction::Append)]
    pub interval: Vec<String>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub poly: PathBuf,
    /// Evaluation point.
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    #[arg(long, short = 'r', value_parser = clap::value_parser!(u32).range(1..))]
    pub precision: u32,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    /// File of '0'/'1' characters for y.
    #[arg(long)]
    pub y: PathBuf,
    /// Bit files for a_1, …, a_d in order.
    #[arg(long = "coeff", required = true)]
    pub coeffs: Vec<PathBuf>,
    /// Split ratio s in [0, 1].
    #[arg(long, default_value = "1/2")]
    pub s: String,
    /// Comma-separated stage ends h_1, h_2, …
    #[arg(long, value_delimiter = ',', conflicts_with = "stage_count")]
    pub stages: Option<Vec<u64>>,
    /// Number of stages of the minimal schedule 2, 4, 16, …
    #[arg(long, default_value_t = 3)]
    pub stage_count: usize,
    /// Output length; defaults to the whole schedule.
    #[arg(long, short = 'n')]
    pub length: Option<usize>,
}
