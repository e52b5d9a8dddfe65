//! Zeros of generalized Laguerre polynomials `L_n^(alpha)`, `alpha > -1`,
//! together with numerical checks of the Bethe ansatz identity at those zeros
//! and of closed-form lower bounds on the gaps between consecutive zeros.
//!
//! The zeros come from the Jacobi matrix eigenvalues ([`solver`]) polished by
//! Newton steps on an overflow-free recurrence ([`eval`]). [`bounds`] holds the
//! closed forms, [`bethe`] the identity checks, [`bessel`] the hard-edge limit
//! against Bessel zeros and [`report`] the sweeps and file output.

pub mod bessel;
mod dd;
pub mod bethe;
pub mod bounds;
pub mod error;
pub mod eval;
pub mod report;
pub mod scaled;
pub mod solver;
pub mod tridiag;

pub use bessel::{bessel_zero, gap_facts, limit_probe, BesselZeroTable, GapFacts, LimitProbe};
pub use bethe::{
    bethe_lhs, bethe_rhs, inequality_chain, remark1_cap, verify_identity, BetheReport,
    BetheSummary, OdeCoefficients,
};
pub use bounds::{
    delta, delta_extremum, edge_params, krasikov_window, range_spacing_lower,
    telescoped_bracket, uniform_spacing_lower, BoundSet, EdgeParams, RangeConstant,
};
pub use error::{Error, Result};
pub use eval::{evaluate, evaluate_derivative, laguerre, ode_residual, LaguerreParams, OdeResidual};
pub use report::{
    bulk_stats, figure1, run_sweep, spacing_rows, verify_pair, Check, CheckSettings, SpacingRow,
    SweepConfig, SweepSummary,
};
pub use scaled::ScaledValue;
pub use solver::{build_jacobi, eigen_zeros, refine, zeros, JacobiMatrix, ZeroMethod, ZeroSet};
