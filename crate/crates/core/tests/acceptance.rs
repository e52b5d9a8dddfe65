//! Acceptance criteria, one test each. Run with
//! `cargo test -p laguerre-core --test acceptance -- --nocapture --test-threads=1`
//! to see the PASS/FAIL table.

mod common;

use std::f64::consts::PI;
use std::fs;

use common::*;
use laguerre_core::report::csv_file_name;
use laguerre_core::*;

fn params(n: usize, alpha: f64) -> LaguerreParams {
    LaguerreParams::new(n, alpha).unwrap()
}

/// Prints the verdict line, then fails the test on any violation.
fn verdict(id: &str, title: &str, violations: Vec<String>) {
    if violations.is_empty() {
        println!("[PASS] {id} {title}");
    } else {
        println!("[FAIL] {id} {title}");
        for v in &violations {
            println!("         {v}");
        }
        panic!("criterion {id} failed: {}", violations.join("; "));
    }
}

#[test]
fn criterion_1_bethe_identity() {
    let mut bad = Vec::new();
    for (n, alpha) in grid_with_edges() {
        let s = verify_identity(&zeros(&params(n, alpha)).unwrap());
        if !(s.max_rel_residual <= 1e-8) {
            bad.push(format!("n={n} alpha={alpha}: residual {:e}", s.max_rel_residual));
        }
    }
    let zs = zeros(&params(2, 0.0)).unwrap();
    for r in verify_identity(&zs).reports {
        if (r.lhs - 0.125).abs() > 1e-13 || (r.rhs - 0.125).abs() > 1e-13 {
            bad.push(format!("n=2 alpha=0 k={}: lhs {} rhs {}", r.k, r.lhs, r.rhs));
        }
    }
    verdict("1", "Bethe identity residual <= 1e-8; n=2 alpha=0 both sides 1/8", bad);
}

#[test]
fn criterion_2_uniform_bound_dominance() {
    let mut bad = Vec::new();
    for (n, alpha) in grid_with_edges() {
        let p = params(n, alpha);
        let bound = 3f64.sqrt() * (alpha + 1.0) / (n as f64 * (n as f64 + alpha + 1.0)).sqrt();
        let zs = zeros(&p).unwrap();
        for (i, s) in zs.spacings_by_rank().into_iter().enumerate() {
            if !(s > bound) {
                bad.push(format!("n={n} alpha={alpha} i={}: {s} <= {bound}", i + 1));
            }
        }
    }
    let rows = spacing_rows(&zeros(&params(2, 0.0)).unwrap());
    if (rows[0].ratio - 4.0).abs() > 1e-13 {
        bad.push(format!("n=2 alpha=0 ratio {}", rows[0].ratio));
    }
    verdict("2", "every spacing > sqrt(3)(alpha+1)/sqrt(n(n+alpha+1)); n=2 alpha=0 ratio 4", bad);
}

#[test]
fn criterion_3_range_bound() {
    let mut bad = Vec::new();
    let c = 1.0;
    for (n, alpha) in default_grid() {
        if alpha < n as f64 / c {
            continue;
        }
        let r = range_spacing_lower(&params(n, alpha), c).unwrap();
        let zs = zeros(&params(n, alpha)).unwrap();
        for s in zs.spacings_by_rank() {
            if !(s >= r.stated && s >= r.proof) {
                bad.push(format!("n={n} alpha={alpha}: {s} vs {} / {}", r.stated, r.proof));
            }
        }
    }
    verdict("3", "alpha >= n (C=1): spacings above stated and proof range bounds", bad);
}

#[test]
fn criterion_4_extreme_zero_windows() {
    let mut bad = Vec::new();
    for (n, alpha) in default_grid() {
        let p = params(n, alpha);
        let zs = zeros(&p).unwrap();
        let e = edge_params(&p);
        let k = krasikov_window(&p);
        if !(e.v2 < zs.min() && zs.max() < e.u2) {
            bad.push(format!("n={n} alpha={alpha}: outside (V^2, U^2)"));
        }
        if !(k.min_lower <= zs.min() && zs.max() <= k.max_upper) {
            bad.push(format!("n={n} alpha={alpha}: outside Krasikov window"));
        }
    }
    verdict("4", "zeros inside (V^2, U^2) and the Krasikov window", bad);
}

#[test]
fn criterion_5_telescoping_bracket() {
    let mut bad = Vec::new();
    for (n, alpha) in default_grid() {
        if alpha < n as f64 {
            continue;
        }
        let p = params(n, alpha);
        let zs = zeros(&p).unwrap();
        let range = zs.max() - zs.min();
        let total: f64 = zs.spacings_by_rank().iter().sum();
        let (lo, hi) = telescoped_bracket(&p, 1.0).unwrap();
        let root = (n as f64 * alpha).sqrt();
        let width = 4.0 * (n as f64 * (n as f64 + alpha + 1.0)).sqrt();
        if (total - range).abs() > 1e-12 * range {
            bad.push(format!("n={n} alpha={alpha}: sum {total} vs range {range}"));
        }
        if rel(lo, root / 2f64.sqrt()) > 1e-15 || rel(hi, 6.0 * 2f64.sqrt() * root) > 1e-15 {
            bad.push(format!("n={n} alpha={alpha}: bracket ({lo}, {hi})"));
        }
        if !(lo <= range && range <= hi && range <= width) {
            bad.push(format!("n={n} alpha={alpha}: range {range} not in [{lo}, {hi}] or above {width}"));
        }
    }
    verdict("5", "alpha >= n: zero range in [sqrt(n a)/sqrt2, 6 sqrt2 sqrt(n a)] and <= U^2-V^2", bad);
}

#[test]
fn criterion_6_closed_form_zeros() {
    let mut bad = Vec::new();
    for alpha in [-0.9, 0.0, 1.0, 1e4] {
        let z = zeros(&params(1, alpha)).unwrap().zeros[0];
        if rel(z, alpha + 1.0) > 1e-14 {
            bad.push(format!("n=1 alpha={alpha}: {z}"));
        }
    }
    for alpha in [-0.9, 0.0, 1.0, 100.0, 1e4] {
        let zs = zeros(&params(2, alpha)).unwrap();
        let r = (alpha + 2.0).sqrt();
        if rel(zs.zeros[0], alpha + 2.0 - r) > 1e-13 || rel(zs.zeros[1], alpha + 2.0 + r) > 1e-13 {
            bad.push(format!("n=2 alpha={alpha}: {:?}", zs.zeros));
        }
    }
    let cubic = |x: f64| x * x * x - 9.0 * x * x + 18.0 * x - 6.0;
    let roots = [bisect(cubic, 0.0, 1.0), bisect(cubic, 1.0, 4.0), bisect(cubic, 4.0, 8.0)];
    let zs = zeros(&params(3, 0.0)).unwrap();
    for (z, r) in zs.zeros.iter().zip(roots) {
        if rel(*z, r) > 1e-12 {
            bad.push(format!("n=3 alpha=0: {z} vs {r}"));
        }
    }
    verdict("6", "closed-form zeros for n = 1, 2, 3", bad);
}

#[test]
fn criterion_7_bessel_limit_trend() {
    let probe = limit_probe(0.5, 1, &[25, 50, 100, 200]).unwrap();
    let dev = probe.deviations(8.0 * PI * PI);
    println!("         scaled spacings {:?}", probe.scaled_spacings);
    let mut bad = Vec::new();
    if !dev.windows(2).all(|w| w[1] < w[0]) {
        bad.push(format!("deviation from 8 pi^2 not decreasing: {dev:?}"));
    }
    if !(dev[3] <= 0.05) {
        bad.push(format!("deviation at n=200 is {:.5} > 0.05", dev[3]));
    }
    verdict("7", "alpha=1/2, k=1: |scaled/8pi^2 - 1| decreasing and <= 0.05 at n=200", bad);
}

#[test]
fn criterion_7_info_quarter_normalization() {
    // Not a listed criterion: the same trend against the actual hard-edge limit.
    let probe = limit_probe(0.5, 1, &[25, 50, 100, 200]).unwrap();
    let dev = probe.deviations(probe.hard_edge_limit());
    let mut bad = Vec::new();
    if !dev.windows(2).all(|w| w[1] < w[0]) || !(dev[3] <= 0.05) {
        bad.push(format!("deviations {dev:?}"));
    }
    verdict("7-info", "alpha=1/2, k=1: |scaled/(3pi^2/4) - 1| decreasing and <= 0.05", bad);
}

#[test]
fn criterion_8_figure1_reproduction() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let fa = figure1(a.path()).unwrap();
    figure1(b.path()).unwrap();
    let mut bad = Vec::new();
    if fa.csv_files.len() != 16 {
        bad.push(format!("{} csv files", fa.csv_files.len()));
    }
    for (n, alpha) in default_grid() {
        let name = csv_file_name(n, alpha);
        let bytes = fs::read(a.path().join(&name)).unwrap();
        if bytes != fs::read(b.path().join(&name)).unwrap() {
            bad.push(format!("{name} differs between runs"));
        }
        let text = String::from_utf8(bytes).unwrap();
        let rows: Vec<(usize, f64, f64)> = text
            .lines()
            .skip(1)
            .map(|l| {
                let f: Vec<&str> = l.split(',').collect();
                (f[0].parse().unwrap(), f[1].parse().unwrap(), f[3].parse().unwrap())
            })
            .collect();
        if rows.len() != n - 1 {
            bad.push(format!("{name}: {} rows", rows.len()));
        }
        if let Some(r) = rows.iter().find(|r| !(r.2 >= 1.0)) {
            bad.push(format!("{name}: ratio {} at i={}", r.2, r.0));
        }
        if alpha == 1.0 {
            let argmin = rows.iter().min_by(|x, y| x.1.total_cmp(&y.1)).unwrap().0;
            if argmin != n - 1 {
                bad.push(format!("{name}: minimum spacing at i={argmin}, expected {}", n - 1));
            }
        }
    }
    if fs::read(&fa.plot_script).unwrap() != fs::read(b.path().join(report::PLOT_SCRIPT)).unwrap() {
        bad.push("plot script differs".into());
    }
    verdict("8", "figure1: 16 CSVs, n-1 rows, ratios >= 1, deterministic, alpha=1 min at i=n-1", bad);
}

#[test]
fn criterion_9_ode_residual() {
    let mut bad = Vec::new();
    for (n, alpha) in grid_with_edges() {
        let p = params(n, alpha);
        let e = edge_params(&p);
        for i in 0..50 {
            let x = e.v2 + (e.u2 - e.v2) * (i as f64 + 0.5) / 50.0;
            let r = ode_residual(&p, x).unwrap().relative();
            if !(r <= 1e-10) {
                bad.push(format!("n={n} alpha={alpha} x={x}: {r:e}"));
            }
        }
    }
    verdict("9", "ODE relative residual <= 1e-10 at 50 points per pair", bad);
}
