//! All zeros of `L_n^(alpha)`: eigenvalues of the Jacobi matrix, then Newton
//! polish against the recurrence.
//!
//! Zeros are stored ascending. The usual ranking in the literature runs the
//! other way (`x_{n,1}` is the largest zero), so rank `k` lives at
//! storage index `n - k`; see [`ZeroSet::by_rank`].

use serde::Serialize;

use crate::bounds::edge_params;
use crate::error::{Error, Result};
use crate::eval::{evaluate, evaluate_derivative, LaguerreParams};
use crate::tridiag::symmetric_tridiagonal_eigenvalues;

const MAX_NEWTON_STEPS: usize = 20;

/// Zeros whose Newton residual exceeds this many ulp-equivalents are rejected.
pub const MAX_RESIDUAL_ULPS: f64 = 64.0;

/// Threshold below which `alpha + 1` is flagged as hugging the singular end.
pub const NEAR_SINGULAR_ALPHA: f64 = 1e-6;

/// Symmetric tridiagonal matrix whose eigenvalues are the zeros of `L_n^(alpha)`.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiMatrix {
    /// `2k + alpha + 1` for `k = 0..n`.
    pub diag: Vec<f64>,
    /// `sqrt(k (k + alpha))` for `k = 1..n`.
    pub offdiag: Vec<f64>,
}

impl JacobiMatrix {
    pub fn dim(&self) -> usize {
        self.diag.len()
    }
}

pub fn build_jacobi(params: &LaguerreParams) -> JacobiMatrix {
    let alpha = params.alpha();
    let n = params.n();
    let diag = (0..n).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
    let offdiag = (1..n)
        .map(|k| {
            let k = k as f64;
            (k * (k + alpha)).sqrt()
        })
        .collect();
    JacobiMatrix { diag, offdiag }
}

/// Eigenvalues of `jacobi`, ascending.
pub fn eigen_zeros(jacobi: &JacobiMatrix) -> Result<Vec<f64>> {
    symmetric_tridiagonal_eigenvalues(&jacobi.diag, &jacobi.offdiag)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZeroMethod {
    EigenOnly,
    EigenNewton,
}

/// The sorted zeros of one Laguerre polynomial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroSet {
    pub params: LaguerreParams,
    /// Strictly increasing.
    pub zeros: Vec<f64>,
    /// `|L(z)| / (|z L'(z)| * eps)` per zero: distance to a true zero in ulps.
    pub residuals: Vec<f64>,
    pub method: ZeroMethod,
}

impl ZeroSet {
    /// Wraps unrefined eigenvalues, computing residuals for them.
    pub fn from_eigenvalues(params: LaguerreParams, zeros: Vec<f64>) -> Result<Self> {
        let residuals = zeros
            .iter()
            .map(|&z| newton_step(&params, z).map(|step| ulp_residual(step, z)))
            .collect::<Result<_>>()?;
        Ok(ZeroSet {
            params,
            zeros,
            residuals,
            method: ZeroMethod::EigenOnly,
        })
    }

    pub fn n(&self) -> usize {
        self.zeros.len()
    }

    pub fn min(&self) -> f64 {
        self.zeros[0]
    }

    pub fn max(&self) -> f64 {
        self.zeros[self.zeros.len() - 1]
    }

    /// `x_{n,k}` for rank `k` (1 = largest zero).
    pub fn by_rank(&self, k: usize) -> Result<f64> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(Error::RankOutOfRange { rank: k, max: n });
        }
        Ok(self.zeros[n - k])
    }

    /// `x_{n,i} - x_{n,i+1}` for `i = 1..n-1`, largest zeros first.
    pub fn spacings_by_rank(&self) -> Vec<f64> {
        self.zeros.windows(2).rev().map(|w| w[1] - w[0]).collect()
    }

    pub fn min_gap(&self) -> Option<f64> {
        self.zeros
            .windows(2)
            .map(|w| w[1] - w[0])
            .min_by(|a, b| a.total_cmp(b))
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    /// `alpha + 1 < 1e-6`: valid, but every bound degenerates towards zero.
    pub fn near_singular_alpha(&self) -> bool {
        self.params.alpha() + 1.0 < NEAR_SINGULAR_ALPHA
    }
}

fn newton_step(params: &LaguerreParams, z: f64) -> Result<f64> {
    let value = evaluate(params, z)?;
    let slope = evaluate_derivative(params, z)?;
    if value.is_zero() {
        return Ok(0.0);
    }
    Ok(value.ratio(&slope))
}

fn ulp_residual(step: f64, z: f64) -> f64 {
    if step == 0.0 {
        0.0
    } else {
        step.abs() / (z.abs() * f64::EPSILON)
    }
}

/// Newton-polishes approximate zeros (ascending, each closer to its own zero
/// than to any other).
pub fn refine(params: &LaguerreParams, approx: &[f64]) -> Result<ZeroSet> {
    let n = approx.len();
    if n != params.n() {
        return Err(Error::Precondition(format!(
            "expected {} approximate zeros, got {n}",
            params.n()
        )));
    }
    if approx.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition("approximate zeros must be strictly ascending".into()));
    }

    let mut zeros = Vec::with_capacity(n);
    let mut residuals = Vec::with_capacity(n);
    for (index, &seed) in approx.iter().enumerate() {
        let lower = if index == 0 { 0.0 } else { 0.5 * (approx[index - 1] + seed) };
        let upper = if index + 1 == n { f64::INFINITY } else { 0.5 * (seed + approx[index + 1]) };

        let mut z = seed;
        let mut best = (f64::INFINITY, seed);
        for _ in 0..MAX_NEWTON_STEPS {
            let step = newton_step(params, z)?;
            if step.abs() < best.0 {
                best = (step.abs(), z);
            }
            if !step.is_finite() {
                break;
            }
            let next = z - step;
            if !(next > lower && next < upper) {
                return Err(Error::RefinementDivergence { index, lower, upper, value: next });
            }
            z = next;
            if step.abs() <= 4.0 * f64::EPSILON * z.abs() {
                break;
            }
        }
        let final_step = newton_step(params, z)?;
        if final_step.abs() > best.0 {
            z = best.1;
        }
        let step = newton_step(params, z)?;
        zeros.push(z);
        residuals.push(ulp_residual(step, z));
    }

    Ok(ZeroSet {
        params: *params,
        zeros,
        residuals,
        method: ZeroMethod::EigenNewton,
    })
}

fn check_separated(values: &[f64]) -> Result<()> {
    for (i, w) in values.windows(2).enumerate() {
        let gap = w[1] - w[0];
        if gap < 1e3 * f64::EPSILON * w[1].abs() {
            return Err(Error::NearDuplicate { index: i + 1, gap });
        }
    }
    Ok(())
}

/// Full pipeline: Jacobi matrix, eigenvalues, Newton polish, invariant checks.
pub fn zeros(params: &LaguerreParams) -> Result<ZeroSet> {
    let seeds = eigen_zeros(&build_jacobi(params))?;
    check_separated(&seeds)?;
    let set = refine(params, &seeds)?;
    check_separated(&set.zeros)?;

    let edge = edge_params(params);
    if !(set.min() > edge.v2 && set.max() < edge.u2) {
        return Err(Error::Invariant(format!(
            "zeros [{}, {}] escape the window ({}, {})",
            set.min(),
            set.max(),
            edge.v2,
            edge.u2
        )));
    }
    if let Some((i, r)) = set
        .residuals
        .iter()
        .enumerate()
        .find(|(_, &r)| r > MAX_RESIDUAL_ULPS)
    {
        return Err(Error::Invariant(format!(
            "zero {i} residual {r:.1} ulp exceeds {MAX_RESIDUAL_ULPS}"
        )));
    }
    Ok(set)
}
