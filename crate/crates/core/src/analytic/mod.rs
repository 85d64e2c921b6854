//! Closed-form oracles and special functions.
//!
//! Everything in this module is pure and deterministic; the Monte Carlo
//! engines are validated against these functions.

mod eta;
mod gamma;
mod hermite;
mod local_time;
pub(crate) mod special;

pub use eta::{eta_te, HalfSpaceOracle};
pub use gamma::{gamma_te, gamma_te_derivatives, PlatesOracle};
pub use hermite::hermite;
pub use local_time::{
    local_time_density, local_time_mgf, local_time_mgf_dd, LocalTimeDensity, LocalTimeParams,
};
pub use special::{erfc, erfcx, gauss_legendre};

/// Probability for a one-dimensional Wiener path to cover a distance `d > 0`
/// from its start within time `tau`: `erfc(d / sqrt(2 tau))`.
///
/// For `tau << d^2` this is bounded above by `exp(-d^2 / 2 tau)`.
pub fn crossing_probability(d: f64, tau: f64) -> f64 {
    assert!(d > 0.0 && tau > 0.0, "crossing_probability needs d > 0, tau > 0");
    special::erfc(d / (2.0 * tau).sqrt())
}

/// Fraction of a path that can be averaged over while keeping the crossing
/// probability below `epsilon`: `scale^2 / (2 total_time ln(1/epsilon))`.
///
/// Callers clamp the result to `[1/N, 1/2)` before using it as `m/N`.
pub fn averaging_fraction(scale: f64, total_time: f64, epsilon: f64) -> f64 {
    assert!(
        scale > 0.0 && total_time > 0.0 && epsilon > 0.0 && epsilon < 1.0,
        "averaging_fraction needs positive arguments and epsilon in (0,1)"
    );
    scale * scale / (2.0 * total_time * (1.0 / epsilon).ln())
}
