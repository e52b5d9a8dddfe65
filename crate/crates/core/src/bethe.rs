//! Bethe ansatz identity at the zeros of `L_n^(alpha)`.
//!
//! For a polynomial with simple real zeros solving `f'' - 2a f' + b f = 0`,
//! every zero satisfies
//! `sum_{j != k} (x_k - x_j)^{-2} = (Delta(x_k) - 2 a'(x_k)) / 3` with
//! `Delta = b - a^2`. For Laguerre polynomials `a(x) = (1 - (alpha+1)/x)/2`
//! and `b(x) = n/x`.

use serde::Serialize;

use crate::bounds::{delta_extremum, delta_factored, edge_params, EdgeParams};
use crate::error::{Error, Result};
use crate::eval::LaguerreParams;
use crate::solver::ZeroSet;

/// Coefficients of the Laguerre ODE written as `u'' - 2a u' + b u = 0`.
#[derive(Debug, Clone, Copy)]
pub struct OdeCoefficients {
    alpha1: f64,
    n: f64,
    edge: EdgeParams,
}

impl OdeCoefficients {
    pub fn new(params: &LaguerreParams) -> Self {
        OdeCoefficients {
            alpha1: params.alpha() + 1.0,
            n: params.n() as f64,
            edge: edge_params(params),
        }
    }

    pub fn a(&self, x: f64) -> f64 {
        0.5 * (1.0 - self.alpha1 / x)
    }

    pub fn a_prime(&self, x: f64) -> f64 {
        self.alpha1 / (2.0 * x * x)
    }

    pub fn b(&self, x: f64) -> f64 {
        self.n / x
    }

    /// `b - a^2`, evaluated in the factored form.
    pub fn delta(&self, x: f64) -> f64 {
        delta_factored(&self.edge, x)
    }
}

/// One row of the identity check; `k` is the rank (1 = largest zero).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BetheReport {
    pub k: usize,
    pub lhs: f64,
    pub rhs: f64,
    /// `|lhs - rhs| / max(lhs, rhs)`; for `n = 1` the absolute `|rhs|`.
    pub rel_residual: f64,
    /// `1 / (x_k - x_{k+1})^2`, absent for the smallest zero.
    pub gap_term: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BetheSummary {
    pub reports: Vec<BetheReport>,
    pub max_rel_residual: f64,
}

fn storage_index(zs: &ZeroSet, k: usize) -> Result<usize> {
    let n = zs.n();
    if k == 0 || k > n {
        return Err(Error::RankOutOfRange { rank: k, max: n });
    }
    Ok(n - k)
}

fn inverse_square_sum(zeros: &[f64], idx: usize) -> f64 {
    let x = zeros[idx];
    let mut below = (0..idx).rev().peekable();
    let mut above = (idx + 1..zeros.len()).peekable();
    let mut sum = 0.0;
    // walk outwards, nearest neighbour first
    loop {
        let next = match (below.peek(), above.peek()) {
            (Some(&b), Some(&a)) => {
                if x - zeros[b] <= zeros[a] - x {
                    below.next()
                } else {
                    above.next()
                }
            }
            (Some(_), None) => below.next(),
            (None, Some(_)) => above.next(),
            (None, None) => break,
        };
        let d = x - zeros[next.unwrap()];
        sum += 1.0 / (d * d);
    }
    sum
}

/// `sum_{j != k} (x_k - x_j)^{-2}` for rank `k`.
pub fn bethe_lhs(zs: &ZeroSet, k: usize) -> Result<f64> {
    let idx = storage_index(zs, k)?;
    if zs.n() < 2 {
        return Err(Error::Parameter("the pair sum needs n >= 2".into()));
    }
    Ok(inverse_square_sum(&zs.zeros, idx))
}

/// `(Delta(x) - 2 a'(x)) / 3`.
pub fn bethe_rhs(params: &LaguerreParams, x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("Bethe right side needs x > 0, got {x}")));
    }
    let ode = OdeCoefficients::new(params);
    Ok((ode.delta(x) - 2.0 * ode.a_prime(x)) / 3.0)
}

/// Checks the identity at every zero.
pub fn verify_identity(zs: &ZeroSet) -> BetheSummary {
    let n = zs.n();
    let ode = OdeCoefficients::new(&zs.params);
    let reports: Vec<BetheReport> = (1..=n)
        .map(|k| {
            let idx = n - k;
            let x = zs.zeros[idx];
            let lhs = if n >= 2 { inverse_square_sum(&zs.zeros, idx) } else { 0.0 };
            let rhs = (ode.delta(x) - 2.0 * ode.a_prime(x)) / 3.0;
            let rel_residual = if n == 1 {
                rhs.abs()
            } else {
                (lhs - rhs).abs() / lhs.max(rhs)
            };
            let gap_term = (idx > 0).then(|| {
                let g = x - zs.zeros[idx - 1];
                1.0 / (g * g)
            });
            BetheReport { k, lhs, rhs, rel_residual, gap_term }
        })
        .collect();
    let max_rel_residual = reports.iter().map(|r| r.rel_residual).fold(0.0, f64::max);
    BetheSummary { reports, max_rel_residual }
}

/// `1/(x_k - x_{k+1})^2 <= sum_{j != k} (x_k - x_j)^{-2} <= sup Delta / 3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InequalityChain {
    pub gap_term: f64,
    pub lhs: f64,
    pub cap: f64,
}

pub fn inequality_chain(zs: &ZeroSet, k: usize) -> Result<InequalityChain> {
    let n = zs.n();
    if n < 2 {
        return Err(Error::Parameter("inequality chain needs n >= 2".into()));
    }
    if k == 0 || k >= n {
        return Err(Error::RankOutOfRange { rank: k, max: n - 1 });
    }
    let idx = n - k;
    let g = zs.zeros[idx] - zs.zeros[idx - 1];
    let chain = InequalityChain {
        gap_term: 1.0 / (g * g),
        lhs: inverse_square_sum(&zs.zeros, idx),
        cap: delta_extremum(&zs.params).delta_max / 3.0,
    };
    if !(chain.gap_term <= chain.lhs && chain.lhs <= chain.cap) {
        return Err(Error::CheckFailed(format!(
            "inequality chain broken at k={k}: {} <= {} <= {}",
            chain.gap_term, chain.lhs, chain.cap
        )));
    }
    Ok(chain)
}

/// Crude cap `2 (pi^2/6) / delta^2` on the pair sum, `delta` the minimum gap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CrudeCap {
    pub min_gap: f64,
    pub crude_cap: f64,
}

pub fn remark1_cap(zs: &ZeroSet) -> Result<CrudeCap> {
    let min_gap = zs
        .min_gap()
        .ok_or_else(|| Error::Parameter("crude cap needs n >= 2".into()))?;
    let crude_cap = std::f64::consts::PI.powi(2) / 3.0 / (min_gap * min_gap);
    for idx in 0..zs.n() {
        let lhs = inverse_square_sum(&zs.zeros, idx);
        if lhs > crude_cap {
            return Err(Error::CheckFailed(format!(
                "pair sum {lhs} at rank {} exceeds crude cap {crude_cap}",
                zs.n() - idx
            )));
        }
    }
    Ok(CrudeCap { min_gap, crude_cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::zeros;

    fn zero_set(n: usize, alpha: f64) -> ZeroSet {
        zeros(&LaguerreParams::new(n, alpha).unwrap()).unwrap()
    }

    #[test]
    fn quadratic_case_is_one_eighth() {
        let zs = zero_set(2, 0.0);
        assert!((bethe_lhs(&zs, 1).unwrap() - 0.125).abs() < 1e-15);
        assert!((bethe_lhs(&zs, 2).unwrap() - 0.125).abs() < 1e-15);
        let s2 = 2f64.sqrt();
        assert!((bethe_rhs(&zs.params, 2.0 + s2).unwrap() - 0.125).abs() < 1e-15);
        assert!((bethe_rhs(&zs.params, 2.0 - s2).unwrap() - 0.125).abs() < 1e-14);
        let summary = verify_identity(&zs);
        assert!(summary.max_rel_residual <= 1e-13);
        assert_eq!(summary.reports[0].k, 1);
    }

    #[test]
    fn linear_case_rhs_vanishes() {
        for &alpha in &[-0.9, 0.0, 5.0, 1e4] {
            let p = LaguerreParams::new(1, alpha).unwrap();
            assert!(bethe_rhs(&p, alpha + 1.0).unwrap().abs() <= 1e-14 / (alpha + 1.0).min(1.0));
        }
        let summary = verify_identity(&zero_set(1, 5.0));
        assert_eq!(summary.reports.len(), 1);
        assert_eq!(summary.reports[0].lhs, 0.0);
        assert!(summary.reports[0].rhs.abs() <= 1e-14);
        assert!(summary.reports[0].gap_term.is_none());
    }

    #[test]
    fn rank_errors() {
        let zs = zero_set(3, 0.0);
        assert!(matches!(bethe_lhs(&zs, 0), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(bethe_lhs(&zs, 4), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(inequality_chain(&zs, 3), Err(Error::RankOutOfRange { .. })));
        assert!(inequality_chain(&zero_set(1, 0.0), 1).is_err());
        assert!(bethe_lhs(&zero_set(1, 0.0), 1).is_err());
        assert!(matches!(bethe_rhs(&zs.params, 0.0), Err(Error::Domain(_))));
    }

    #[test]
    fn chain_small_case() {
        let zs = zero_set(2, 0.0);
        let c = inequality_chain(&zs, 1).unwrap();
        assert!((c.gap_term - 0.125).abs() < 1e-15);
        assert!((c.lhs - 0.125).abs() < 1e-15);
        assert!((c.cap - 2.0).abs() < 1e-14);
    }

    #[test]
    fn chain_holds_for_every_rank() {
        let zs = zero_set(10, 1.0);
        for k in 1..10 {
            let c = inequality_chain(&zs, k).unwrap();
            assert!(c.gap_term < c.lhs && c.lhs < c.cap);
        }
    }

    #[test]
    fn crude_cap() {
        let zs = zero_set(2, 0.0);
        let c = remark1_cap(&zs).unwrap();
        assert!((c.min_gap - 2.0 * 2f64.sqrt()).abs() < 1e-14);
        assert!((c.crude_cap - 0.411_233_516_712_056_6).abs() < 1e-14);
        remark1_cap(&zero_set(10, 1.0)).unwrap();
        assert!(remark1_cap(&zero_set(1, 1.0)).is_err());
    }

    #[test]
    fn ode_coefficients() {
        let p = LaguerreParams::new(12, 3.5).unwrap();
        let ode = OdeCoefficients::new(&p);
        let e = edge_params(&p);
        for i in 1..20 {
            let x = e.v2 + (e.u2 - e.v2) * i as f64 / 20.0;
            let direct = ode.b(x) - ode.a(x).powi(2);
            assert!((ode.delta(x) - direct).abs() <= 1e-12 * direct.abs());
            let h = 1e-5 * x;
            let fd = (ode.a(x + h) - ode.a(x - h)) / (2.0 * h);
            assert!((fd - ode.a_prime(x)).abs() <= 1e-6 * ode.a_prime(x));
        }
    }
}
