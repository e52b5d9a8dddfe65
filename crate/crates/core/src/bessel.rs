//! Bessel zeros `j_{alpha,k}` for `alpha` in `(-1, 1]`, and the hard-edge
//! limit of scaled Laguerre spacings.
//!
//! `J_nu` is evaluated with Miller's backward recurrence normalized by
//! `(x/2)^nu = sum_k c_k J_{nu+2k}(x)`, `c_0 = Gamma(nu+1)`,
//! `c_k = (nu+2k) Gamma(nu+k) / k!`. Unlike the ascending power series this
//! stays accurate for the arguments up to ~65 that the first 20 zeros need.

use std::f64::consts::PI;

use serde::Serialize;
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};
use crate::eval::LaguerreParams;
use crate::solver::zeros;

pub const MAX_RANK: usize = 20;

fn check_order(alpha: f64) -> Result<()> {
    if !(alpha > -1.0 && alpha <= 1.0) {
        return Err(Error::Domain(format!("Bessel order must lie in (-1, 1], got {alpha}")));
    }
    Ok(())
}

/// `(J_nu(x), J_{nu+1}(x))` for `nu` in `(-1, 1]`, `x > 0`.
pub fn bessel_j_pair(nu: f64, x: f64) -> (f64, f64) {
    debug_assert!(x > 0.0);
    let start = {
        let m = (x + 30.0 + 10.0 * x.sqrt()).ceil() as usize;
        m + m % 2
    };
    let half = start / 2;

    // c_k / Gamma(nu+1): 1, then (nu+2k)/k * prod_{j<k} (nu+j)/j
    let mut weights = Vec::with_capacity(half + 1);
    weights.push(1.0);
    let mut prod = 1.0;
    for k in 1..=half {
        let kf = k as f64;
        if k > 1 {
            prod *= (nu + kf - 1.0) / (kf - 1.0);
        }
        weights.push((nu + 2.0 * kf) / kf * prod);
    }

    let mut above = 0.0;
    let mut cur = 1e-30;
    let mut norm = if start % 2 == 0 { weights[half] * cur } else { 0.0 };
    let mut first = 0.0;
    for k in (1..=start).rev() {
        let below = 2.0 * (nu + k as f64) / x * cur - above;
        above = cur;
        cur = below;
        if (k - 1) % 2 == 0 {
            norm += weights[(k - 1) / 2] * cur;
        }
        if k == 1 {
            first = above;
        }
        if cur.abs() > 1e250 {
            cur *= 1e-250;
            above *= 1e-250;
            norm *= 1e-250;
        }
    }
    let prefactor = (0.5 * x).powf(nu) / gamma(nu + 1.0) / norm;
    (prefactor * cur, prefactor * first)
}

/// `J_nu(x)`.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    check_order(nu)?;
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::Domain(format!("Bessel argument must be > 0, got {x}")));
    }
    Ok(bessel_j_pair(nu, x).0)
}

fn value_and_slope(nu: f64, x: f64) -> (f64, f64) {
    let (j, j_next) = bessel_j_pair(nu, x);
    (j, nu / x * j - j_next)
}

/// Leading McMahon term `(k + alpha/2 - 1/4) pi`.
pub fn mcmahon_guess(alpha: f64, k: usize) -> f64 {
    (k as f64 + 0.5 * alpha - 0.25) * PI
}

/// `j_{alpha,k}`, the k-th positive zero of `J_alpha`.
pub fn bessel_zero(alpha: f64, k: usize) -> Result<f64> {
    check_order(alpha)?;
    if k == 0 || k > MAX_RANK {
        return Err(Error::Domain(format!("Bessel zero rank must be in 1..={MAX_RANK}, got {k}")));
    }

    // Bracket the k-th sign change. Consecutive zeros are more than 2 apart
    // for these orders, so a 0.25 step never skips one.
    const STEP: f64 = 0.25;
    let mut lo = 1e-9;
    let mut f_lo = value_and_slope(alpha, lo).0;
    let mut found = 0;
    let mut hi = lo;
    loop {
        let x = hi + STEP;
        let f = value_and_slope(alpha, x).0;
        if f == 0.0 || f.signum() != f_lo.signum() {
            found += 1;
            if found == k {
                lo = hi;
                hi = x;
                break;
            }
        }
        hi = x;
        f_lo = f;
    }

    // Newton from the McMahon seed, falling back to bisection outside the bracket.
    let mut f_lo = value_and_slope(alpha, lo).0;
    let mut z = mcmahon_guess(alpha, k).clamp(lo, hi);
    for _ in 0..100 {
        let (f, df) = value_and_slope(alpha, z);
        if f == 0.0 {
            return Ok(z);
        }
        if f.signum() == f_lo.signum() {
            lo = z;
            f_lo = f;
        } else {
            hi = z;
        }
        let newton = z - f / df;
        let next = if newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
        if (next - z).abs() <= 2.0 * f64::EPSILON * z {
            return Ok(next);
        }
        z = next;
    }
    Ok(z)
}

/// The first `K` zeros of `J_alpha`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BesselZeroTable {
    pub alpha: f64,
    pub zeros: Vec<f64>,
}

impl BesselZeroTable {
    pub fn new(alpha: f64, count: usize) -> Result<Self> {
        if count > MAX_RANK {
            return Err(Error::Domain(format!("at most {MAX_RANK} zeros, got {count}")));
        }
        let zeros = (1..=count).map(|k| bessel_zero(alpha, k)).collect::<Result<_>>()?;
        Ok(BesselZeroTable { alpha, zeros })
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }
}

/// Gap and sum facts for one consecutive pair `(j_k, j_{k+1})`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GapFactRow {
    pub k: usize,
    pub gap: f64,
    pub sum: f64,
    /// `pi <= gap`.
    pub gap_at_least_pi: bool,
    /// `gap <= 2 pi`.
    pub gap_at_most_two_pi: bool,
    /// `sum >= 1 + alpha`.
    pub sum_at_least_one_plus_alpha: bool,
    /// `2 sqrt((k - 1/4)^2 pi + alpha^2)`, recorded only.
    pub sum_bound_pi: f64,
    /// `2 sqrt((k - 1/4)^2 pi^2 + alpha^2)`, recorded only.
    pub sum_bound_pi_squared: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapFacts {
    pub alpha: f64,
    pub rows: Vec<GapFactRow>,
}

impl GapFacts {
    pub fn all_hold(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.gap_at_least_pi && r.gap_at_most_two_pi && r.sum_at_least_one_plus_alpha)
    }
}

/// Relative slack allowed when comparing a gap with `pi`, so that exactly
/// equispaced zeros (order 1/2) compare as equal.
const GAP_SLACK: f64 = 1e-12;

pub fn gap_facts(table: &BesselZeroTable) -> Result<GapFacts> {
    if table.len() < 2 {
        return Err(Error::Precondition("gap facts need at least two zeros".into()));
    }
    let alpha = table.alpha;
    let rows = table
        .zeros
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let k = i + 1;
            let gap = w[1] - w[0];
            let sum = w[1] + w[0];
            let q = k as f64 - 0.25;
            GapFactRow {
                k,
                gap,
                sum,
                gap_at_least_pi: gap >= PI * (1.0 - GAP_SLACK),
                gap_at_most_two_pi: gap <= 2.0 * PI,
                sum_at_least_one_plus_alpha: sum >= 1.0 + alpha,
                sum_bound_pi: 2.0 * (q * q * PI + alpha * alpha).sqrt(),
                sum_bound_pi_squared: 2.0 * (q * q * PI * PI + alpha * alpha).sqrt(),
            }
        })
        .collect();
    Ok(GapFacts { alpha, rows })
}

/// Scaled Laguerre spacings `(n + (alpha+1)/2) (x_{k+1} - x_k)` near the
/// hard edge (`x_k` the k-th smallest zero) along a grid of degrees.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitProbe {
    pub alpha: f64,
    pub k: usize,
    pub n_grid: Vec<usize>,
    pub scaled_spacings: Vec<f64>,
    /// `j_{alpha,k+1}^2 - j_{alpha,k}^2`.
    pub target: f64,
}

impl LimitProbe {
    /// Limit of the scaled spacings: the small zeros behave like
    /// `j_{alpha,k}^2 / (4n + 2alpha + 2)`, hence a quarter of `target`.
    pub fn hard_edge_limit(&self) -> f64 {
        0.25 * self.target
    }

    /// `|scaled / reference - 1|` along the grid.
    pub fn deviations(&self, reference: f64) -> Vec<f64> {
        self.scaled_spacings
            .iter()
            .map(|s| (s / reference - 1.0).abs())
            .collect()
    }
}

pub fn limit_probe(alpha: f64, k: usize, n_grid: &[usize]) -> Result<LimitProbe> {
    check_order(alpha)?;
    if k == 0 || k + 1 > MAX_RANK {
        return Err(Error::Precondition(format!("rank k must be in 1..{MAX_RANK}, got {k}")));
    }
    let smallest = n_grid
        .iter()
        .copied()
        .min()
        .ok_or_else(|| Error::Precondition("empty degree grid".into()))?;
    if k + 1 > smallest {
        return Err(Error::Precondition(format!(
            "k+1 = {} exceeds the smallest degree {smallest}",
            k + 1
        )));
    }
    let scaled_spacings = n_grid
        .iter()
        .map(|&n| {
            let zs = zeros(&LaguerreParams::new(n, alpha)?)?;
            let scale = n as f64 + 0.5 * (alpha + 1.0);
            Ok(scale * (zs.zeros[k] - zs.zeros[k - 1]))
        })
        .collect::<Result<_>>()?;
    let jk = bessel_zero(alpha, k)?;
    let jk1 = bessel_zero(alpha, k + 1)?;
    Ok(LimitProbe {
        alpha,
        k,
        n_grid: n_grid.to_vec(),
        scaled_spacings,
        target: jk1 * jk1 - jk * jk,
    })
}
