//! Normalized Casimir--Polder efficiency for an atom facing a dielectric
//! half-space.

use crate::error::{invalid, Result};

/// Below this susceptibility the closed form loses digits to cancellation
/// (three terms of size 1/χ cancel to O(χ)), so a series is used instead.
const SERIES_SWITCH: f64 = 1e-3;

/// Efficiency of the atom--half-space potential, normalized to the
/// perfect-conductor potential:
///
/// ```text
/// η_TE(χ) = 1/6 + 1/χ − sqrt(1+χ)/(2χ) − asinh(sqrt χ)/(2 χ^{3/2})
/// ```
///
/// `η_TE` is distance independent, increasing in χ, and bounded by 1/6; an
/// infinite χ maps to exactly 1/6.  For `χ < 1e-3` the Taylor expansion
/// `χ/40 − χ²/112 + 5χ³/1152` is used to avoid catastrophic cancellation.
pub fn eta_te(chi: f64) -> f64 {
    assert!(chi >= 0.0, "eta_te needs chi >= 0");
    if chi.is_infinite() {
        return 1.0 / 6.0;
    }
    if chi == 0.0 {
        return 0.0;
    }
    if chi < SERIES_SWITCH {
        return chi / 40.0 - chi * chi / 112.0 + 5.0 * chi * chi * chi / 1152.0;
    }
    1.0 / 6.0 + 1.0 / chi - (1.0 + chi).sqrt() / (2.0 * chi)
        - chi.sqrt().asinh() / (2.0 * chi.powf(1.5))
}

/// Closed-form oracle for the atom--half-space geometry.
#[derive(Clone, Copy, Debug)]
pub struct HalfSpaceOracle {
    chi: f64,
}

impl HalfSpaceOracle {
    /// A half-space of dimensionless susceptibility `chi >= 0` (may be
    /// infinite for the perfect-conductor limit).
    pub fn new(chi: f64) -> Result<Self> {
        if chi.is_nan() || chi < 0.0 {
            return Err(invalid("chi", format!("susceptibility must be >= 0, got {chi}")));
        }
        Ok(Self { chi })
    }

    /// Susceptibility.
    pub fn chi(&self) -> f64 {
        self.chi
    }

    /// Normalized potential efficiency; the same value is the oracle for the
    /// potential and for every normalized source-point derivative.
    pub fn eta(&self) -> f64 {
        eta_te(self.chi)
    }
}
