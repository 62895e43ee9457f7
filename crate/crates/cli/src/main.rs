//! `binvert`: exact Binomial/Invert transforms of linear recurrent sequences
//! from the command line.

mod commands;
mod report;
mod tables;

use std::process::ExitCode;

use binvert_core::FieldSpec;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "binvert", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Coefficient field, `Q` or `Q(sqrt d)` for square-free d > 1
    #[arg(long, default_value = "Q")]
    pub field: FieldSpec,
    /// Print a JSON report instead of text
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug, Clone)]
pub struct JsonFlag {
    /// Print a JSON report instead of text
    #[arg(long)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print terms of a recurrence given by characteristic polynomial and
    /// initial values
    Eval {
        #[arg(long)]
        poly: String,
        /// Comma-separated initial values; defaults to the impulse (0, …, 0, 1)
        #[arg(long)]
        init: Option<String>,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Apply an operator pipeline such as `I(1) . rho . I(1)`
    ///
    /// Pipelines read right to left like function composition: the
    /// rightmost step is applied first. Pass `--left-to-right` to apply
    /// steps in written order instead.
    Transform {
        #[arg(long)]
        pipeline: String,
        /// `startsequence`, `impulse:<poly>` or `literal:<comma list>`
        #[arg(long, default_value = "startsequence")]
        input: String,
        /// Characteristic polynomial of a general input; overrides --input
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, requires = "poly")]
        init: Option<String>,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long)]
        left_to_right: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Emit the pipeline that builds an impulse sequence from the
    /// startsequence
    Construct {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Zeros of the characteristic polynomial (L mode)
        #[arg(long, required_if_eq("mode", "l"))]
        zeros: Option<String>,
        /// Recurrence coefficients h_1, …, h_r (I mode)
        #[arg(long, required_if_eq("mode", "i"))]
        coeffs: Option<String>,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Emit the pipeline that takes an impulse sequence back to the
    /// startsequence
    Deconstruct {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Characteristic polynomial of the impulse sequence
        #[arg(long)]
        poly: String,
        /// Zeros of the polynomial, in construction order (L mode)
        #[arg(long, required_if_eq("mode", "l"))]
        zeros: Option<String>,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run an identity-verification suite
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Print a combinatorial table
    Table {
        #[command(subcommand)]
        table: Table,
    },
    /// Print a named sequence
    Seq {
        #[command(subcommand)]
        seq: Seq,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    #[value(name = "l", alias = "L")]
    L,
    #[value(name = "i", alias = "I")]
    I,
}

#[derive(Subcommand, Debug)]
pub enum Suite {
    /// Σ binom(2n,i) (−1/2)^{2n−i} F_i = 0 for every n up to --n
    FibAntimean {
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[command(flatten)]
        output: JsonFlag,
    },
    /// I(u) = F^(1) and I(ρ(F^(r))) = F^(r+1), plus the Bell and
    /// cross-order identities, for every order up to --r
    RbonacciLadder {
        #[arg(long, default_value_t = 6)]
        r: usize,
        #[arg(long, default_value_t = 30)]
        count: usize,
        #[command(flatten)]
        output: JsonFlag,
    },
    /// L^(1) identities and one-click deconstruction of the q-gonal numbers
    Polygonal {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[command(flatten)]
        output: JsonFlag,
    },
}

#[derive(Subcommand, Debug)]
pub enum Table {
    /// Stirling numbers of the second kind, or unsigned of the first kind
    Stirling {
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long)]
        first: bool,
        #[command(flatten)]
        output: JsonFlag,
    },
    /// Partial ordinary Bell polynomials B_{n,k} at a comma-separated argument
    Bell {
        #[arg(long)]
        values: String,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Figurate numbers T^(k)_h, one row per k
    Figurate {
        #[arg(long, default_value_t = 6)]
        k: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[command(flatten)]
        output: JsonFlag,
    },
    /// Forward-difference table of a comma-separated list
    Differences {
        #[arg(long)]
        values: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
pub enum Seq {
    /// P_q(0), P_q(1), …
    Polygonal {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[command(flatten)]
        output: JsonFlag,
    },
    /// Pyramidal numbers of dimension --d
    Pyramidal {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 3)]
        d: u32,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[command(flatten)]
        output: JsonFlag,
    },
    /// r-bonacci numbers
    Rbonacci {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[command(flatten)]
        output: JsonFlag,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(output) => {
            print!("{}", output.text);
            if output.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
