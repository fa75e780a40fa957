//! Command-line surface: subcommands selecting check families and grid
//! flags shared across them. Parsing failures (unknown flags, malformed or
//! empty ranges, p-max below 3) are usage errors.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "delannoy",
    version,
    about = "Exact verification of Delannoy power-sum identities, congruences, and conjecture scans",
    long_about = "Computes Delannoy polynomials and their weighted power sums in exact \
arbitrary-precision arithmetic, verifies the associated closed-form identities and \
congruences over parameter grids, and scans the open conjectures for counterexamples. \
Reports are machine-readable (JSONL or CSV), one record per grid cell, in a canonical \
order independent of parallelism."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the closed-form identities as exact polynomial/integer equalities
    Identities(GridArgs),
    /// Check every proven congruence and divisibility theorem on its grid
    Theorems(GridArgs),
    /// Scan the open conjectures for counterexamples (discovery mode)
    Conjectures(GridArgs),
    /// Check the weighted power-sum divisibility over an (n, m, x) grid
    Divisibility(GridArgs),
    /// Run everything: identities, theorems, divisibility, conjecture scans
    All(GridArgs),
}

impl Command {
    pub fn grid_args(&self) -> &GridArgs {
        match self {
            Command::Identities(args)
            | Command::Theorems(args)
            | Command::Conjectures(args)
            | Command::Divisibility(args)
            | Command::All(args) => args,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON object per line
    Jsonl,
    /// Header row plus one row per record
    Csv,
}

/// Grid flags; each subcommand honors the subset meaningful for its
/// checks and leaves the rest at their defaults.
#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    /// Largest index n swept by the index-graded checks
    #[arg(long = "max-n", value_name = "N")]
    pub max_n: Option<u64>,

    /// Comma-separated power-sum exponents m
    #[arg(long = "m-set", value_name = "M,M,...", value_delimiter = ',')]
    pub m_set: Option<Vec<u32>>,

    /// Largest prime swept by the prime-graded checks (at least 3)
    #[arg(long = "p-max", value_name = "P", value_parser = parse_p_max)]
    pub p_max: Option<u64>,

    /// Inclusive range of evaluation points x, written lo:hi
    #[arg(
        long = "x-range",
        value_name = "LO:HI",
        allow_hyphen_values = true,
        value_parser = parse_x_range
    )]
    pub x_range: Option<(i64, i64)>,

    /// Modulus exponent for the strengthened alternating quartic congruence
    #[arg(long, value_name = "E")]
    pub e: Option<u32>,

    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    pub format: Format,

    /// Write the report to this file instead of standard output
    #[arg(long = "out-path", value_name = "FILE")]
    pub out_path: Option<PathBuf>,

    /// Number of worker threads (defaults to all available cores)
    #[arg(long, value_name = "J")]
    pub jobs: Option<usize>,

    /// Omit the elapsed_ms field so reports are byte-reproducible
    #[arg(long = "no-timing")]
    pub no_timing: bool,
}

fn parse_p_max(raw: &str) -> Result<u64, String> {
    let value: u64 = raw
        .parse()
        .map_err(|_| format!("'{raw}' is not an unsigned integer"))?;
    if value < 3 {
        return Err(format!("p-max must be at least 3, got {value}"));
    }
    Ok(value)
}

fn parse_x_range(raw: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = raw
        .split_once(':')
        .ok_or_else(|| format!("'{raw}' is not of the form lo:hi"))?;
    let lo: i64 = lo
        .parse()
        .map_err(|_| format!("range start '{lo}' is not an integer"))?;
    let hi: i64 = hi
        .parse()
        .map_err(|_| format!("range end '{hi}' is not an integer"))?;
    if lo > hi {
        return Err(format!("empty range: {lo} > {hi}"));
    }
    Ok((lo, hi))
}

/// Parses an argv into a validated invocation without exiting, so callers
/// (and tests) decide how to surface errors.
pub fn parse_args<I, T>(argv: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(argv)
}
