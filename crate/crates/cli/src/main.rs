//! `p1cert`: run the certificates, print the derived constants, evaluate the
//! tritronquée.
//!
//! Exit codes: 0 when everything selected passes, 1 when an inequality or
//! check fails, 2 on precondition violations and unusable input.

mod commands;
mod parse;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{Ctx, Output};

#[derive(Parser, Debug)]
#[command(name = "p1cert", version, about = "Certificates for the pole-free region of the Painleve I tritronquee")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Appendix table file; overrides P1CERT_DATA_DIR and the embedded copy.
    #[arg(long, global = true, value_name = "PATH")]
    tables: Option<PathBuf>,
    /// Partition plan file; overrides P1CERT_DATA_DIR and the embedded copy.
    #[arg(long, global = true, value_name = "PATH")]
    partitions: Option<PathBuf>,
    /// Working precision of the floating-point evaluator (at least 100).
    #[arg(long, global = true, default_value_t = p1cert::evaluator::DEFAULT_BITS)]
    precision_bits: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run certificates; exit 0 iff all selected ones pass.
    Verify {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(p1cert::certificates::Scope::NAMES))]
        scope: String,
        /// Far-field radius for the omega_4 certificate, e.g. 3 or 7/2.
        #[arg(long, default_value = "3")]
        rho: String,
        /// Quadrature panels for the omega_12 constants.
        #[arg(long, default_value_t = p1cert::certificates::quadrature::DEFAULT_PANELS)]
        panels: u32,
    },
    /// Derived constants with their reference values.
    Constants {
        #[arg(long, default_value = "3")]
        rho: String,
    },
    /// Exact table and functional identities.
    Identities,
    /// Evaluate y(z).
    Eval {
        /// "re,im", "r<theta" (radians) or a real number; rationals as p/q.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Maclaurin coefficients of g at t = 0.
    Series {
        #[arg(long, default_value_t = 16)]
        order: usize,
    },
    /// Nearest pole of g to t = 0 over a scan of rays.
    Pole {
        #[arg(long, default_value_t = 24)]
        directions: usize,
        #[arg(long, default_value_t = 10.0)]
        horizon: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = match Ctx::new(cli.tables.as_deref(), cli.partitions.as_deref(), cli.precision_bits) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("p1cert: {msg}");
            return ExitCode::from(2);
        }
    };
    let out: Output = match &cli.command {
        Command::Verify { scope, rho, panels } => commands::verify(&ctx, scope, rho, *panels),
        Command::Constants { rho } => commands::constants(&ctx, rho),
        Command::Identities => commands::identities(&ctx),
        Command::Eval { z } => commands::eval(&ctx, z),
        Command::Series { order } => commands::series(&ctx, *order),
        Command::Pole { directions, horizon } => commands::pole(&ctx, *directions, *horizon),
    };
    print!("{}", out.emit(&ctx, cli.format));
    for w in &out.warnings {
        eprintln!("p1cert: warning: {w}");
    }
    ExitCode::from(out.code)
}
