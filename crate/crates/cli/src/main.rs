//! `laguerre`: zeros, spacing bounds and verification reports for Laguerre polynomials.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use laguerre_core::report::{parse_checks, rows_to_csv};
use laguerre_core::{
    figure1, limit_probe, run_sweep, spacing_rows, verify_pair, zeros, BoundSet, CheckSettings,
    LaguerreParams, RangeConstant, SweepConfig,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "laguerre", version, about = "Zeros and zero spacings of generalized Laguerre polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the zeros in ascending order.
    Zeros {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        /// Emit the full zero set (with residuals) as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print the spacing table as CSV.
    Spacings {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
    },
    /// Print the closed-form bounds as JSON.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        /// Range-bound constant: a number, or `auto` for C = n/alpha.
        #[arg(long = "C", value_name = "VALUE|auto")]
        c: Option<String>,
    },
    /// Run checks on one pair; exits with status 1 if any fails.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value = "bethe,bounds,krasikov")]
        checks: String,
    },
    /// Run a sweep described by a config file; exits with status 1 if any check fails.
    Sweep {
        #[arg(long)]
        config: PathBuf,
    },
    /// Write the 4x4 spacing-vs-bound data set and its plot script.
    Figure1 {
        #[arg(long)]
        out: PathBuf,
    },
    /// Scaled hard-edge spacings against the Bessel-zero limit.
    BesselProbe {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long)]
        k: usize,
        /// Comma-separated degrees.
        #[arg(long, value_delimiter = ',', required = true)]
        ngrid: Vec<usize>,
    },
}

fn params(n: usize, alpha: f64) -> anyhow::Result<LaguerreParams> {
    Ok(LaguerreParams::new(n, alpha)?)
}

fn range_constant(c: Option<&str>) -> anyhow::Result<RangeConstant> {
    Ok(match c {
        None => RangeConstant::Skip,
        Some("auto") => RangeConstant::Auto,
        Some(v) => RangeConstant::Fixed(v.parse().with_context(|| format!("bad --C value `{v}`"))?),
    })
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Zeros { n, alpha, json } => {
            let zs = zeros(&params(n, alpha)?)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&zs)?);
            } else {
                for z in &zs.zeros {
                    println!("{z:.16e}");
                }
            }
        }
        Command::Spacings { n, alpha } => {
            let zs = zeros(&params(n, alpha)?)?;
            print!("{}", rows_to_csv(&spacing_rows(&zs)));
        }
        Command::Bounds { n, alpha, c } => {
            let bounds = BoundSet::compute(&params(n, alpha)?, range_constant(c.as_deref())?)?;
            println!("{}", serde_json::to_string_pretty(&bounds)?);
        }
        Command::Verify { n, alpha, checks } => {
            params(n, alpha)?;
            let outcome = verify_pair(n, alpha, &CheckSettings::new(parse_checks(&checks)?));
            let report = json!({ "summary": outcome.summary, "failures": outcome.failures });
            println!("{}", serde_json::to_string_pretty(&report)?);
            for f in &outcome.failures {
                eprintln!("FAIL {}: {}", f.check, f.detail);
            }
            return Ok(outcome.failures.is_empty());
        }
        Command::Sweep { config } => {
            let text = fs::read_to_string(&config)
                .with_context(|| format!("reading {}", config.display()))?;
            let config = SweepConfig::parse(&text)?;
            let summary = run_sweep(&config)?;
            for f in &summary.failures {
                eprintln!("FAIL n={} alpha={} {}: {}", f.n, f.alpha, f.check, f.detail);
            }
            println!(
                "{} pairs, {} failures; summary in {}",
                summary.pairs.len(),
                summary.failures.len(),
                config.output_dir.join(laguerre_core::report::SUMMARY_FILE).display()
            );
            return Ok(summary.passed());
        }
        Command::Figure1 { out } => {
            let files = figure1(&out)?;
            for f in files.csv_files.iter().chain([&files.plot_script]) {
                println!("{}", f.display());
            }
        }
        Command::BesselProbe { alpha, k, ngrid } => {
            if ngrid.is_empty() {
                bail!("--ngrid needs at least one degree");
            }
            let probe = limit_probe(alpha, k, &ngrid)?;
            let limit = probe.hard_edge_limit();
            let report = json!({
                "probe": probe,
                "hard_edge_limit": limit,
                "deviations": probe.deviations(limit),
            });
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
