//! Parameter sweeps, per-pair CSV output, the JSON summary and the 4x4
//! spacing-versus-bound figure data.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bethe::verify_identity;
use crate::bounds::{krasikov_window, uniform_spacing_lower};
use crate::error::{Error, Result};
use crate::eval::LaguerreParams;
use crate::solver::{zeros, ZeroSet};

/// Largest Bethe residual a pair may show before the sweep fails it.
pub const BETHE_TOLERANCE: f64 = 1e-8;

pub const DEFAULT_N_VALUES: [usize; 4] = [10, 20, 50, 100];
pub const DEFAULT_ALPHA_VALUES: [f64; 4] = [1.0, 100.0, 1e3, 1e4];
pub const DEFAULT_EPSILON: f64 = 0.1;
pub const DEFAULT_BULK_FACTOR: f64 = 2.0;

pub const CSV_HEADER: &str = "i,spacing,uniform_bound,ratio";
pub const SUMMARY_FILE: &str = "summary.json";
pub const PLOT_SCRIPT: &str = "plot_figure1.py";

/// One consecutive gap; `i = 1` is the gap below the largest zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpacingRow {
    pub n: usize,
    pub alpha: f64,
    pub i: usize,
    pub spacing: f64,
    pub uniform_bound: f64,
    pub ratio: f64,
}

pub fn spacing_rows(zs: &ZeroSet) -> Vec<SpacingRow> {
    let n = zs.n();
    let alpha = zs.params.alpha();
    let Ok(bound) = uniform_spacing_lower(&zs.params) else {
        return Vec::new();
    };
    zs.spacings_by_rank()
        .into_iter()
        .enumerate()
        .map(|(idx, spacing)| SpacingRow {
            n,
            alpha,
            i: idx + 1,
            spacing,
            uniform_bound: bound,
            ratio: spacing / bound,
        })
        .collect()
}

fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn rows_to_csv(rows: &[SpacingRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.i,
            fmt_real(r.spacing),
            fmt_real(r.uniform_bound),
            fmt_real(r.ratio)
        );
    }
    out
}

pub fn csv_file_name(n: usize, alpha: f64) -> String {
    format!("n{n}_alpha{alpha}.csv")
}

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, contents).map_err(|e| Error::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
}

/// Fraction of bulk spacings (`eps n <= i <= (1-eps) n`) within a factor `c`
/// of the uniform bound.
pub fn bulk_stats(zs: &ZeroSet, epsilon: f64, c: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(Error::Precondition(format!("epsilon must be in (0, 1/2), got {epsilon}")));
    }
    if !(c >= 1.0) {
        return Err(Error::Precondition(format!("factor c must be >= 1, got {c}")));
    }
    let n = zs.n();
    if n < 3 {
        return Err(Error::Precondition(format!("bulk statistics need n >= 3, got {n}")));
    }
    let nf = n as f64;
    let rows = spacing_rows(zs);
    let bulk: Vec<&SpacingRow> = rows
        .iter()
        .filter(|r| epsilon * nf <= r.i as f64 && r.i as f64 <= (1.0 - epsilon) * nf)
        .collect();
    if bulk.is_empty() {
        return Err(Error::Precondition(format!("no spacings in the bulk window for n={n}")));
    }
    let close = bulk.iter().filter(|r| r.ratio <= c).count();
    Ok(close as f64 / bulk.len() as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Bethe,
    Bounds,
    Krasikov,
    Bulk,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::Bethe, Check::Bounds, Check::Krasikov, Check::Bulk];
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "bethe" => Ok(Check::Bethe),
            "bounds" => Ok(Check::Bounds),
            "krasikov" => Ok(Check::Krasikov),
            "bulk" => Ok(Check::Bulk),
            other => Err(Error::Config(format!("unknown check '{other}'"))),
        }
    }
}

pub fn parse_checks(list: &str) -> Result<BTreeSet<Check>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub n_values: Vec<usize>,
    pub alpha_values: Vec<f64>,
    pub checks: BTreeSet<Check>,
    pub epsilon: f64,
    /// Factor `c` for [`bulk_stats`].
    pub bulk_factor: f64,
    /// Largest accepted Bethe residual.
    pub bethe_tolerance: f64,
    pub output_dir: PathBuf,
}

impl SweepConfig {
    /// The 4x4 grid `n in {10,20,50,100}`, `alpha in {1,100,1e3,1e4}` with all checks.
    pub fn default_grid(output_dir: impl Into<PathBuf>) -> Self {
        SweepConfig {
            n_values: DEFAULT_N_VALUES.to_vec(),
            alpha_values: DEFAULT_ALPHA_VALUES.to_vec(),
            checks: Check::ALL.into_iter().collect(),
            epsilon: DEFAULT_EPSILON,
            bulk_factor: DEFAULT_BULK_FACTOR,
            bethe_tolerance: BETHE_TOLERANCE,
            output_dir: output_dir.into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_values.is_empty() || self.alpha_values.is_empty() {
            return Err(Error::Config("n_values and alpha_values must be non-empty".into()));
        }
        for &n in &self.n_values {
            for &alpha in &self.alpha_values {
                LaguerreParams::new(n, alpha)?;
            }
        }
        if !(self.epsilon > 0.0 && self.epsilon < 0.5) {
            return Err(Error::Config(format!("epsilon must be in (0, 1/2), got {}", self.epsilon)));
        }
        if !(self.bulk_factor >= 1.0) {
            return Err(Error::Config(format!("bulk_factor must be >= 1, got {}", self.bulk_factor)));
        }
        if !(self.bethe_tolerance >= 0.0) {
            return Err(Error::Config(format!(
                "bethe_tolerance must be >= 0, got {}",
                self.bethe_tolerance
            )));
        }
        Ok(())
    }

    /// Parses flat `key = value` text; `#` starts a comment, lists are
    /// comma-separated. `n_values`, `alpha_values` and `output_dir` are required.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n_values = None;
        let mut alpha_values = None;
        let mut checks = Check::ALL.into_iter().collect();
        let mut epsilon = DEFAULT_EPSILON;
        let mut bulk_factor = DEFAULT_BULK_FACTOR;
        let mut bethe_tolerance = BETHE_TOLERANCE;
        let mut output_dir = None;

        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| Error::Config(format!("line {}: bad {key}: {what}", lineno + 1));
            match key {
                "n_values" => {
                    n_values = Some(
                        split_list(value)
                            .map(|s| s.parse::<usize>().map_err(|e| bad(&e.to_string())))
                            .collect::<Result<Vec<_>>>()?,
                    )
                }
                "alpha_values" => {
                    alpha_values = Some(
                        split_list(value)
                            .map(|s| s.parse::<f64>().map_err(|e| bad(&e.to_string())))
                            .collect::<Result<Vec<_>>>()?,
                    )
                }
                "checks" => checks = parse_checks(value)?,
                "epsilon" => epsilon = value.parse().map_err(|_| bad(value))?,
                "bulk_factor" => bulk_factor = value.parse().map_err(|_| bad(value))?,
                "bethe_tolerance" => bethe_tolerance = value.parse().map_err(|_| bad(value))?,
                "output_dir" => output_dir = Some(PathBuf::from(value)),
                other => return Err(Error::Config(format!("line {}: unknown key '{other}'", lineno + 1))),
            }
        }
        let config = SweepConfig {
            n_values: n_values.ok_or_else(|| Error::Config("missing n_values".into()))?,
            alpha_values: alpha_values.ok_or_else(|| Error::Config("missing alpha_values".into()))?,
            checks,
            epsilon,
            bulk_factor,
            bethe_tolerance,
            output_dir: output_dir.ok_or_else(|| Error::Config("missing output_dir".into()))?,
        };
        config.validate()?;
        Ok(config)
    }
}

fn split_list(value: &str) -> impl Iterator<Item = &str> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairSummary {
    pub n: usize,
    pub alpha: f64,
    pub min_ratio: Option<f64>,
    pub max_bethe_residual: Option<f64>,
    pub krasikov_ok: Option<bool>,
    pub bulk_fraction: Option<f64>,
    pub near_singular_alpha: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub n: usize,
    pub alpha: f64,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub pairs: Vec<PairSummary>,
    pub failures: Vec<Failure>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("summary serializes");
        s.push('\n');
        s
    }
}

/// Everything computed for one `(n, alpha)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairOutcome {
    pub rows: Vec<SpacingRow>,
    pub summary: PairSummary,
    pub failures: Vec<Failure>,
}

/// Which checks to run on a pair, and their thresholds.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckSettings {
    pub checks: BTreeSet<Check>,
    pub epsilon: f64,
    pub bulk_factor: f64,
    pub bethe_tolerance: f64,
}

impl CheckSettings {
    pub fn new(checks: BTreeSet<Check>) -> Self {
        CheckSettings {
            checks,
            epsilon: DEFAULT_EPSILON,
            bulk_factor: DEFAULT_BULK_FACTOR,
            bethe_tolerance: BETHE_TOLERANCE,
        }
    }
}

impl SweepConfig {
    pub fn check_settings(&self) -> CheckSettings {
        CheckSettings {
            checks: self.checks.clone(),
            epsilon: self.epsilon,
            bulk_factor: self.bulk_factor,
            bethe_tolerance: self.bethe_tolerance,
        }
    }
}

/// Computes zeros, spacings and bounds for one pair and runs the enabled checks.
pub fn verify_pair(n: usize, alpha: f64, settings: &CheckSettings) -> PairOutcome {
    let checks = &settings.checks;
    let mut summary = PairSummary {
        n,
        alpha,
        min_ratio: None,
        max_bethe_residual: None,
        krasikov_ok: None,
        bulk_fraction: None,
        near_singular_alpha: alpha + 1.0 < crate::solver::NEAR_SINGULAR_ALPHA,
    };
    let mut failures = Vec::new();
    let mut fail = |check: &str, detail: String| {
        failures.push(Failure { n, alpha, check: check.into(), detail })
    };

    let zs = match LaguerreParams::new(n, alpha).and_then(|p| zeros(&p)) {
        Ok(zs) => zs,
        Err(e) => {
            fail("zeros", e.to_string());
            return PairOutcome { rows: Vec::new(), summary, failures };
        }
    };
    let rows = spacing_rows(&zs);
    summary.min_ratio = rows.iter().map(|r| r.ratio).min_by(|a, b| a.total_cmp(b));

    if checks.contains(&Check::Bethe) {
        let bethe = verify_identity(&zs);
        summary.max_bethe_residual = Some(bethe.max_rel_residual);
        if !(bethe.max_rel_residual <= settings.bethe_tolerance) {
            fail(
                "bethe",
                format!(
                    "max relative residual {:e} exceeds {:e}",
                    bethe.max_rel_residual, settings.bethe_tolerance
                ),
            );
        }
    }
    if checks.contains(&Check::Bounds) {
        if let Some(r) = rows.iter().find(|r| !(r.ratio > 1.0)) {
            fail(
                "bounds",
                format!("spacing i={} is {} but the uniform bound is {}", r.i, r.spacing, r.uniform_bound),
            );
        }
    }
    if checks.contains(&Check::Krasikov) {
        let w = krasikov_window(&zs.params);
        let ok = w.min_lower <= zs.min() && zs.max() <= w.max_upper;
        summary.krasikov_ok = Some(ok);
        if !ok {
            fail(
                "krasikov",
                format!("zeros [{}, {}] outside window [{}, {}]", zs.min(), zs.max(), w.min_lower, w.max_upper),
            );
        }
    }
    if checks.contains(&Check::Bulk) && n >= 3 {
        // reported only
        summary.bulk_fraction = bulk_stats(&zs, settings.epsilon, settings.bulk_factor).ok();
    }
    PairOutcome { rows, summary, failures }
}

fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

/// Runs every `(n, alpha)` pair, writes `n{n}_alpha{alpha}.csv` per pair and
/// `summary.json`, and returns the summary. Pairs are ordered by `n`, then
/// `alpha`, independent of scheduling.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepSummary> {
    config.validate()?;
    ensure_dir(&config.output_dir)?;

    let mut grid: Vec<(usize, f64)> = config
        .n_values
        .iter()
        .flat_map(|&n| config.alpha_values.iter().map(move |&a| (n, a)))
        .collect();
    grid.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
    grid.dedup();

    let settings = config.check_settings();
    let outcomes: Vec<PairOutcome> = grid
        .par_iter()
        .map(|&(n, alpha)| {
            let out = verify_pair(n, alpha, &settings);
            let path = config.output_dir.join(csv_file_name(n, alpha));
            write_atomic(&path, &rows_to_csv(&out.rows)).map(|_| out)
        })
        .collect::<Result<_>>()?;

    let mut summary = SweepSummary { pairs: Vec::new(), failures: Vec::new() };
    for out in outcomes {
        summary.pairs.push(out.summary);
        summary.failures.extend(out.failures);
    }
    write_atomic(&config.output_dir.join(SUMMARY_FILE), &summary.to_json())?;
    Ok(summary)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure1Files {
    pub csv_files: Vec<PathBuf>,
    pub plot_script: PathBuf,
}

/// Writes the 16 CSVs of the default grid plus a matplotlib script drawing a
/// 4x4 panel (spacings in blue, uniform bound in red).
pub fn figure1(output_dir: &Path) -> Result<Figure1Files> {
    ensure_dir(output_dir)?;
    let none = CheckSettings::new(BTreeSet::new());
    let grid: Vec<(usize, f64)> = DEFAULT_N_VALUES
        .iter()
        .flat_map(|&n| DEFAULT_ALPHA_VALUES.iter().map(move |&a| (n, a)))
        .collect();
    let csv_files = grid
        .par_iter()
        .map(|&(n, alpha)| {
            let out = verify_pair(n, alpha, &none);
            if let Some(f) = out.failures.first() {
                return Err(Error::CheckFailed(format!("n={n} alpha={alpha}: {}", f.detail)));
            }
            let path = output_dir.join(csv_file_name(n, alpha));
            write_atomic(&path, &rows_to_csv(&out.rows))?;
            Ok(path)
        })
        .collect::<Result<Vec<_>>>()?;
    let plot_script = output_dir.join(PLOT_SCRIPT);
    write_atomic(&plot_script, &plot_script_text())?;
    Ok(Figure1Files { csv_files, plot_script })
}

fn plot_script_text() -> String {
    let ns = DEFAULT_N_VALUES.map(|n| n.to_string()).join(", ");
    let alphas = DEFAULT_ALPHA_VALUES.map(|a| format!("\"{a}\"")).join(", ");
    format!(
        r#"#!/usr/bin/env python3
"""Spacings x_(n,i) - x_(n,i+1) (blue) against the uniform lower bound (red).

Run from the directory holding the n{{n}}_alpha{{alpha}}.csv files.
"""
import csv
import os
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

N_VALUES = [{ns}]
ALPHA_VALUES = [{alphas}]

here = os.path.dirname(os.path.abspath(__file__))
fig, axes = plt.subplots(len(N_VALUES), len(ALPHA_VALUES), figsize=(14, 12))
for row, n in enumerate(N_VALUES):
    for col, alpha in enumerate(ALPHA_VALUES):
        with open(os.path.join(here, f"n{{n}}_alpha{{alpha}}.csv")) as fh:
            records = list(csv.DictReader(fh))
        i = [int(r["i"]) for r in records]
        spacing = [float(r["spacing"]) for r in records]
        bound = float(records[0]["uniform_bound"])
        ax = axes[row][col]
        ax.plot(i, spacing, "b-")
        ax.axhline(bound, color="r")
        ax.set_title(f"n={{n}}, alpha={{alpha}}", fontsize=8)
fig.tight_layout()
out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, "figure1.png")
fig.savefig(out, dpi=150)
"#
    )
}
