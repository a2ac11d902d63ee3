use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::input::RhoSelection;

#[derive(Debug, Parser)]
#[command(
    name = "isoindex",
    version,
    about = "Harmonic-sequence invariants and index lower bounds for holomorphic curves"
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

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants, Plücker check and bounds for a curve document.
    Analyze {
        /// Curve JSON file, `-` for stdin, or an inline JSON document.
        input: String,
        /// `all` or a comma-separated list of ρ in 0..=n.
        #[arg(long, default_value = "all")]
        rho: RhoSelection,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Bounds for directrix data given directly.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        g: BigInt,
        #[arg(long = "deg-f", allow_hyphen_values = true)]
        deg_f: BigInt,
        #[arg(long)]
        rho: usize,
        /// `r_0,…,r_{ρ-1}` or the full `r_0,…,r_{n-1}`.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        r: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Plücker residuals only.
    Verify {
        input: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Precompose with a rational self-map, then analyze.
    ComposeAnalyze {
        input: String,
        /// `NUM` or `NUM/DEN` in `z`, e.g. `z^3` or `(z^2+1)/(2z)`; parenthesize rational coefficients.
        #[arg(long, allow_hyphen_values = true)]
        map: String,
        #[arg(long, default_value = "all")]
        rho: RhoSelection,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Replay the worked-example corpus against its expected values.
    Examples {
        /// Only examples whose name contains this text.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}
