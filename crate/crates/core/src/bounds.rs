//! Closed-form edge quantities and spacing lower bounds for Laguerre zeros.
//!
//! Everything is expressed through `U = sqrt(n+alpha+1) + sqrt(n)` and
//! `V = sqrt(n+alpha+1) - sqrt(n)`, for which `U V = alpha + 1` and
//! `U^2 - V^2 = 4 sqrt(n (n+alpha+1))`. The function
//! `Delta(x) = (U^2 - x)(x - V^2) / (4 x^2)` is positive exactly on `(V^2, U^2)`
//! and peaks at `x* = 2 U^2 V^2 / (U^2 + V^2)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::eval::LaguerreParams;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EdgeParams {
    pub u: f64,
    pub v: f64,
    pub u2: f64,
    pub v2: f64,
    /// `U^2 - V^2`, evaluated as `4 sqrt(n) sqrt(n+alpha+1)` to avoid cancellation.
    pub width: f64,
}

pub fn edge_params(params: &LaguerreParams) -> EdgeParams {
    let n = params.n() as f64;
    let a1 = params.alpha() + 1.0;
    let root_n = n.sqrt();
    let root_m = (n + a1).sqrt();
    let u = root_m + root_n;
    // V = (alpha+1)/U avoids the cancellation in sqrt(n+alpha+1) - sqrt(n)
    let v = a1 / u;
    EdgeParams {
        u,
        v,
        u2: u * u,
        v2: v * v,
        width: 4.0 * root_n * root_m,
    }
}

/// `Delta(x) = (U^2 - x)(x - V^2) / (4 x^2)`.
pub fn delta(params: &LaguerreParams, x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("Delta needs x > 0, got {x}")));
    }
    Ok(delta_factored(&edge_params(params), x))
}

pub(crate) fn delta_factored(edge: &EdgeParams, x: f64) -> f64 {
    (edge.u2 - x) * (x - edge.v2) / (4.0 * x * x)
}

/// `n/x - (x - alpha - 1)^2 / (4 x^2)`; cross-check for [`delta`].
pub fn delta_rational(params: &LaguerreParams, x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("Delta needs x > 0, got {x}")));
    }
    let shifted = x - params.alpha() - 1.0;
    Ok(params.n() as f64 / x - shifted * shifted / (4.0 * x * x))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeltaExtremum {
    pub x_star: f64,
    pub delta_max: f64,
}

pub fn delta_extremum(params: &LaguerreParams) -> DeltaExtremum {
    let e = edge_params(params);
    let uv2 = e.u2 * e.v2;
    DeltaExtremum {
        x_star: 2.0 * uv2 / (e.u2 + e.v2),
        delta_max: e.width * e.width / (16.0 * uv2),
    }
}

fn require_spacings(params: &LaguerreParams) -> Result<()> {
    if params.n() < 2 {
        return Err(Error::Parameter(format!(
            "spacings need degree >= 2, got {}",
            params.n()
        )));
    }
    Ok(())
}

/// `sqrt(3) (alpha+1) / sqrt(n (n+alpha+1))`: holds for every consecutive gap.
pub fn uniform_spacing_lower(params: &LaguerreParams) -> Result<f64> {
    require_spacings(params)?;
    let n = params.n() as f64;
    let a1 = params.alpha() + 1.0;
    Ok(3f64.sqrt() * a1 / (n.sqrt() * (n + a1).sqrt()))
}

/// Lower bounds valid when `alpha >= n / C`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RangeBound {
    pub c: f64,
    /// `sqrt(alpha/n) / sqrt(C+1)`.
    pub stated: f64,
    /// `sqrt(3 / (2 (C+1))) sqrt(alpha/n)`, the constant the argument actually yields.
    pub proof: f64,
}

fn check_range_precondition(params: &LaguerreParams, c: f64) -> Result<()> {
    if !(c.is_finite() && c > 0.0) {
        return Err(Error::Precondition(format!("C must be finite and > 0, got {c}")));
    }
    let n = params.n() as f64;
    // alpha >= n/C, tested as C alpha >= n to keep the boundary exact
    if c * params.alpha() < n {
        return Err(Error::Precondition(format!(
            "range bound needs alpha >= n/C, got alpha={} n={} C={c}",
            params.alpha(),
            params.n()
        )));
    }
    Ok(())
}

pub fn range_spacing_lower(params: &LaguerreParams, c: f64) -> Result<RangeBound> {
    check_range_precondition(params, c)?;
    let ratio = (params.alpha() / params.n() as f64).sqrt();
    Ok(RangeBound {
        c,
        stated: ratio / (c + 1.0).sqrt(),
        proof: (3.0 / (2.0 * (c + 1.0))).sqrt() * ratio,
    })
}

/// `(sqrt(n alpha)/sqrt(C+1), 6 sqrt(C+1) sqrt(n alpha))`: brackets the total
/// zero range `x_max - x_min` when `alpha >= n/C`.
pub fn telescoped_bracket(params: &LaguerreParams, c: f64) -> Result<(f64, f64)> {
    require_spacings(params)?;
    check_range_precondition(params, c)?;
    let root = (params.n() as f64 * params.alpha()).sqrt();
    let rc = (c + 1.0).sqrt();
    Ok((root / rc, 6.0 * rc * root))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KrasikovWindow {
    pub min_lower: f64,
    pub max_upper: f64,
}

/// Refined window for the extreme zeros:
/// `V^2 + 3 V^{4/3} W^{-1/3} <= x_min` and `x_max <= U^2 - 3 U^{4/3} W^{-1/3} + 2`
/// with `W = U^2 - V^2`.
pub fn krasikov_window(params: &LaguerreParams) -> KrasikovWindow {
    let e = edge_params(params);
    let w = e.width.cbrt();
    KrasikovWindow {
        min_lower: e.v2 + 3.0 * e.v.powf(4.0 / 3.0) / w,
        max_upper: e.u2 - 3.0 * e.u.powf(4.0 / 3.0) / w + 2.0,
    }
}

/// How to choose `C` for the range bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RangeConstant {
    /// No range bound.
    Skip,
    /// `C = n / alpha`, the smallest admissible value (needs `alpha > 0`).
    Auto,
    Fixed(f64),
}

/// Every closed-form quantity for one `(n, alpha)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundSet {
    pub edge: EdgeParams,
    pub uniform_lower: f64,
    pub range: Option<RangeBound>,
    pub krasikov: KrasikovWindow,
    pub delta_max: f64,
    pub x_star: f64,
}

impl BoundSet {
    pub fn compute(params: &LaguerreParams, constant: RangeConstant) -> Result<Self> {
        let uniform_lower = uniform_spacing_lower(params)?;
        let range = match constant {
            RangeConstant::Skip => None,
            RangeConstant::Auto if params.alpha() > 0.0 => {
                let c = params.n() as f64 / params.alpha();
                Some(range_spacing_lower(params, c)?)
            }
            RangeConstant::Auto => None,
            RangeConstant::Fixed(c) => Some(range_spacing_lower(params, c)?),
        };
        let ext = delta_extremum(params);
        Ok(BoundSet {
            edge: edge_params(params),
            uniform_lower,
            range,
            krasikov: krasikov_window(params),
            delta_max: ext.delta_max,
            x_star: ext.x_star,
        })
    }
}
