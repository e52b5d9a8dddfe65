//! Evaluation of generalized Laguerre polynomials `L_n^(alpha)`.
//!
//! Values come from the three-term recurrence
//! `(k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}`, carried with a
//! shared binary exponent so that large degrees and exponents do not overflow.
//! Derivatives use `d/dx L_n^(a) = -L_{n-1}^(a+1)` and
//! `d2/dx2 L_n^(a) = L_{n-2}^(a+2)`.
//!
//! The recurrence runs in double-double so that values near the small zeros,
//! where the terms cancel heavily, keep full `f64` accuracy.

use serde::Serialize;

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::scaled::{frexp, ldexp, ScaledValue};

/// Degree `n >= 1` and exponent `alpha > -1` of one Laguerre polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LaguerreParams {
    n: usize,
    alpha: f64,
}

impl LaguerreParams {
    pub fn new(n: usize, alpha: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::Parameter(format!("degree must be >= 1, got {n}")));
        }
        if !alpha.is_finite() || alpha <= -1.0 {
            return Err(Error::Parameter(format!(
                "alpha must be finite and > -1, got {alpha}"
            )));
        }
        Ok(LaguerreParams { n, alpha })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

const RESCALE_HIGH: f64 = 1.340_780_792_994_259_7e154; // 2^512
const RESCALE_LOW: f64 = 7.458_340_731_200_207e-155; // 2^-512

fn check_abscissa(x: f64) -> Result<()> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!("x must be finite and >= 0, got {x}")));
    }
    Ok(())
}

/// `L_degree^(alpha)(x)` for any degree including 0. `alpha > -1`, `x >= 0`.
pub fn laguerre(degree: usize, alpha: f64, x: f64) -> Result<ScaledValue> {
    if !alpha.is_finite() || alpha <= -1.0 {
        return Err(Error::Parameter(format!(
            "alpha must be finite and > -1, got {alpha}"
        )));
    }
    check_abscissa(x)?;
    Ok(recurrence(degree, alpha, x))
}

fn recurrence(degree: usize, alpha: f64, x: f64) -> ScaledValue {
    if degree == 0 {
        return ScaledValue::new(1.0);
    }
    let alpha_dd = Dd::new(alpha);
    let x_dd = Dd::new(x);
    let mut prev = Dd::new(1.0);
    let mut cur = Dd::sum(alpha, 1.0) - x_dd;
    let mut exponent: i64 = 0;
    for k in 1..degree {
        let kf = k as f64;
        let slope = Dd::sum(2.0 * kf + 1.0, alpha) - x_dd;
        let lag = alpha_dd + Dd::new(kf);
        let next = (slope * cur - lag * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
        let size = cur.hi.abs().max(prev.hi.abs());
        if size > RESCALE_HIGH || (size < RESCALE_LOW && size > 0.0) {
            let (_, e) = frexp(size);
            let factor = ldexp(1.0, -e);
            prev = prev.scale_pow2(factor);
            cur = cur.scale_pow2(factor);
            exponent += e;
        }
    }
    ScaledValue::from_parts(cur.to_f64(), exponent)
}

/// `L_n^(alpha)(x)`.
pub fn evaluate(params: &LaguerreParams, x: f64) -> Result<ScaledValue> {
    laguerre(params.n, params.alpha, x)
}

/// `d/dx L_n^(alpha)(x)`, computed as `-L_{n-1}^(alpha+1)(x)`.
pub fn evaluate_derivative(params: &LaguerreParams, x: f64) -> Result<ScaledValue> {
    laguerre(params.n - 1, params.alpha + 1.0, x).map(|v| -v)
}

/// `d2/dx2 L_n^(alpha)(x)`, computed as `L_{n-2}^(alpha+2)(x)`; zero for `n < 2`.
pub fn evaluate_second_derivative(params: &LaguerreParams, x: f64) -> Result<ScaledValue> {
    if params.n < 2 {
        check_abscissa(x)?;
        return Ok(ScaledValue::ZERO);
    }
    laguerre(params.n - 2, params.alpha + 2.0, x)
}

/// Residual of `u'' - (1 - (alpha+1)/x) u' + (n/x) u = 0` at one point,
/// together with the magnitude it should be judged against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeResidual {
    pub residual: ScaledValue,
    /// `max(|u''|, |u'|, |u| n / x)`.
    pub scale: ScaledValue,
}

impl OdeResidual {
    pub fn relative(&self) -> f64 {
        if self.scale.is_zero() {
            return self.residual.to_f64().abs();
        }
        self.residual.ratio(&self.scale).abs()
    }
}

pub fn ode_residual(params: &LaguerreParams, x: f64) -> Result<OdeResidual> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "ODE residual needs x > 0 (pole at the origin), got {x}"
        )));
    }
    let u = evaluate(params, x)?;
    let du = evaluate_derivative(params, x)?;
    let d2u = evaluate_second_derivative(params, x)?;
    let drift = 1.0 - (params.alpha + 1.0) / x;
    let potential = params.n as f64 / x;

    let residual = d2u - du * drift + u * potential;
    let scale = d2u.max_abs(du).max_abs(u * potential);
    Ok(OdeResidual { residual, scale })
}
