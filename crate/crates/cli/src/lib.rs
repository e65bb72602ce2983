//! Command-line front end for `polyzero-core`.
//!
//! Four subcommands: `check` lists which hypotheses a polynomial satisfies,
//! `bound` prints zero-count bounds for `|z| <= δ`, `count` prints the exact
//! number of zeros in a disk, and `bench` runs a seeded family against the
//! exact counts and writes a CSV.

// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bench;
pub mod document;
pub mod error;
pub mod render;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use polyzero_core::hypothesis::{check_enestrom_kakeya, full_report};
use polyzero_core::oracle::count_in_disk;
use polyzero_core::{bounds, Polynomial, TheoremId};

pub use error::CliError;
use render::Format;

#[derive(Debug, Parser)]
#[command(name = "polyzero", version, about = "Zero-count bounds for complex polynomials in a disk")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report which hypotheses hold, with witness parameters.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Upper bounds on the number of zeros in |z| <= delta.
    Bound {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        delta: f64,
        /// A, B, C, D, E, F, T1, T2 or auto (the tightest applicable bound).
        #[arg(long, default_value = "auto", value_parser = parse_theorem_choice)]
        theorem: TheoremChoice,
        /// Every applicable bound, one row per theorem.
        #[arg(long, conflicts_with = "theorem")]
        all: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Exact number of zeros in the closed disk |z| <= delta.
    Count {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_negative_numbers = true)]
        delta: f64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Compare a family's bounds with exact counts over a delta grid.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct Input {
    /// Inline coefficients, a_0 first: "re,im;re,im;...".
    #[arg(long, conflicts_with = "file")]
    pub coeffs: Option<String>,
    /// JSON document {"coeffs": [[re, im], ...]}; stdin when absent or "-".
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Family hypothesis: EK_A, B, C, D, E, F or T2.
    #[arg(long)]
    pub family: String,
    /// Degree, or an inclusive range lo:hi cycled over the instances.
    #[arg(long)]
    pub degree: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// start:stop:step, a comma list, or a single value.
    #[arg(long, default_value = "0.1:0.9:0.1")]
    pub delta_grid: String,
    /// Output CSV path.
    #[arg(long)]
    pub out: PathBuf,
    /// Cap on coefficient magnitudes.
    #[arg(long, default_value_t = 10.0)]
    pub scale: f64,
    /// Fixed peak index for the T2 family.
    #[arg(long)]
    pub lambda: Option<usize>,
    /// Worker threads; 0 picks the number of CPUs.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremChoice {
    Auto,
    Theorem(TheoremId),
}

fn parse_theorem_choice(s: &str) -> Result<TheoremChoice, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(TheoremChoice::Auto);
    }
    s.parse().map(TheoremChoice::Theorem).map_err(|_| format!("unknown theorem '{s}'"))
}

impl Input {
    pub fn load(&self) -> Result<Polynomial, CliError> {
        document::load(self.coeffs.as_deref(), self.file.as_deref())
    }
}

/// Runs one command, writing its report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Check { input, format } => check(&input.load()?, *format, out),
        Command::Bound { input, delta, theorem, all, format } => {
            bound(&input.load()?, *delta, *theorem, *all, *format, out)
        }
        Command::Count { input, delta, format } => {
            let c = count_in_disk(&input.load()?, *delta)?;
            out.write_all(render::count_text(&c, *format)?.as_bytes())?;
            Ok(())
        }
        Command::Bench(args) => run_bench(args, out),
    }
}

fn check(p: &Polynomial, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    if p.constant_term().norm() == 0.0 {
        return Err(CliError::Input("a_0 = 0: the counting theorems need a nonzero constant term".into()));
    }
    let report = full_report(p);
    let text = match format {
        Format::Json => render::hypothesis_json(&report, p.degree())?,
        Format::Csv => render::hypothesis_csv(&report)?,
        Format::Table => render::hypothesis_table(&report, p.degree()),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

const LOCATION_NOTE: &str = "EK_A: every zero lies in the closed unit disk";

fn bound(
    p: &Polynomial,
    delta: f64,
    theorem: TheoremChoice,
    all: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let mut notes = Vec::new();
    let rows = if all {
        let rows = bounds::all_bounds(p, delta)?;
        if check_enestrom_kakeya(p) {
            notes.push(LOCATION_NOTE.to_string());
        }
        rows
    } else {
        match theorem {
            TheoremChoice::Auto => vec![bounds::best_bound(p, delta)?],
            TheoremChoice::Theorem(TheoremId::EkA) => {
                if !(delta > 0.0 && delta < 1.0) {
                    return Err(bounds::BoundError::BadDelta(delta).into());
                }
                if !check_enestrom_kakeya(p) {
                    return Err(bounds::BoundError::HypothesisNotSatisfied(TheoremId::EkA).into());
                }
                out.write_all(format!("{LOCATION_NOTE}\n").as_bytes())?;
                return Ok(());
            }
            TheoremChoice::Theorem(id) => vec![bounds::best_for_theorem(p, id, delta)?],
        }
    };
    let text = match format {
        Format::Table => render::bounds_table(&rows, &notes),
        Format::Json => render::bounds_json(&rows)?,
        Format::Csv => render::bounds_csv(&rows)?,
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn run_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let family: TheoremId =
        args.family.parse().map_err(|_| CliError::Input(format!("unknown family '{}'", args.family)))?;
    let cfg = bench::BenchConfig {
        family,
        degrees: bench::parse_degrees(&args.degree)?,
        seed: args.seed,
        count: args.count,
        deltas: bench::parse_delta_grid(&args.delta_grid)?,
        scale: args.scale,
        lambda: args.lambda,
    };
    let outcome = bench::run(&cfg, args.threads)?;
    std::fs::write(&args.out, outcome.to_csv(family)?)?;
    writeln!(out, "{}", outcome.summary())?;
    match outcome.violations() {
        0 => Ok(()),
        v => Err(CliError::Violations(v)),
    }
}
