//! Normalized Casimir efficiency for two parallel delta-function plates and
//! its distance derivatives.
//!
//! The energy per unit area, normalized to the perfect-conductor value
//! `-π² ħc/720 d³`, depends on the plate strength `χ̂` and separation `d`
//! only through `c = χ̂/d`:
//!
//! ```text
//! γ_TE(c) = -(180/π⁴) ∫₀^∞ dξ ξ² ∫₁^∞ dp p ln(1 − r² e^{−2pξ}),
//! r = −ξc / (2p + ξc).
//! ```
//!
//! `r` is the single-interface reflection coefficient at imaginary frequency
//! `ξ` (in units of 1/d) and transverse parameter `p = κ/ξ`.  The weak and
//! strong limits are `γ_TE ≈ 27c²/4π⁴` and `γ_TE → 1/2`.
//!
//! Distance derivatives are taken on the dimensional proxy
//! `G(d) = γ_TE(χ̂/d)/d³`, differentiating under the integral sign (the
//! integrand is smooth in `d` for `χ̂ > 0`):
//!
//! ```text
//! G'(d)  = −[c γ' + 3 γ]/d⁴,
//! G''(d) = [c² γ'' + 8 c γ' + 12 γ]/d⁵.
//! ```

use crate::error::{invalid, Error, Result};

use super::special::gauss_legendre;

/// Relative node-doubling change above which the quadrature is declared
/// non-convergent.
const CONVERGENCE_TOL: f64 = 1e-8;

/// Normalized two-plate efficiency `γ_TE(χ̂/d)`.
///
/// `nodes` is the Gauss--Legendre order per axis (at least 32); the result is
/// accepted only if doubling the nodes changes it by less than 1e-8
/// relative.  `χ̂ = 0` returns exactly 0 and an infinite `χ̂` exactly 1/2.
pub fn gamma_te(chi_hat: f64, d: f64, nodes: usize) -> Result<f64> {
    check_geometry(chi_hat, d, nodes)?;
    if chi_hat == 0.0 {
        return Ok(0.0);
    }
    if chi_hat.is_infinite() {
        return Ok(0.5);
    }
    let c = chi_hat / d;
    converged(nodes, |k| tensor_integral(c, k, Order::Value))
}

/// Distance derivative of order 1 or 2 of `G(d) = γ_TE(χ̂/d)/d³`.
///
/// Computed by analytic differentiation of the integrand, not finite
/// differences.  Used as the oracle for the Monte Carlo force (`order 1`)
/// and curvature (`order 2`).
pub fn gamma_te_derivatives(chi_hat: f64, d: f64, order: u8) -> Result<f64> {
    gamma_te_derivatives_with_nodes(chi_hat, d, order, 64)
}

/// As [`gamma_te_derivatives`] with an explicit base node count.
pub fn gamma_te_derivatives_with_nodes(
    chi_hat: f64,
    d: f64,
    order: u8,
    nodes: usize,
) -> Result<f64> {
    check_geometry(chi_hat, d, nodes)?;
    if order != 1 && order != 2 {
        return Err(invalid("order", format!("derivative order must be 1 or 2, got {order}")));
    }
    if chi_hat == 0.0 {
        return Ok(0.0);
    }
    if chi_hat.is_infinite() {
        // gamma is the constant 1/2: G = 1/(2 d^3).
        return Ok(match order {
            1 => -1.5 / d.powi(4),
            _ => 6.0 / d.powi(5),
        });
    }
    let c = chi_hat / d;
    let g = converged(nodes, |k| tensor_integral(c, k, Order::Value))?;
    let gp = converged(nodes, |k| tensor_integral(c, k, Order::First))?;
    match order {
        1 => Ok(-(c * gp + 3.0 * g) / d.powi(4)),
        _ => {
            let gpp = converged(nodes, |k| tensor_integral(c, k, Order::Second))?;
            Ok((c * c * gpp + 8.0 * c * gp + 12.0 * g) / d.powi(5))
        }
    }
}

/// Closed-form oracle for the two-plate geometry.
#[derive(Clone, Copy, Debug)]
pub struct PlatesOracle {
    chi_hat_over_d: f64,
    quadrature_nodes: usize,
}

impl PlatesOracle {
    /// Oracle at dimensionless coupling `χ̂/d >= 0` (may be infinite).
    pub fn new(chi_hat_over_d: f64, quadrature_nodes: usize) -> Result<Self> {
        if chi_hat_over_d.is_nan() || chi_hat_over_d < 0.0 {
            return Err(invalid("chi_hat_over_d", "coupling must be >= 0"));
        }
        if quadrature_nodes < 32 {
            return Err(invalid("quadrature_nodes", "need at least 32 nodes"));
        }
        Ok(Self { chi_hat_over_d, quadrature_nodes })
    }

    /// Dimensionless coupling `χ̂/d`.
    pub fn coupling(&self) -> f64 {
        self.chi_hat_over_d
    }

    /// Normalized efficiency `γ_TE`.
    pub fn gamma(&self) -> Result<f64> {
        gamma_te(self.chi_hat_over_d, 1.0, self.quadrature_nodes)
    }

    /// `G'(d)` or `G''(d)` at `d = 1`.
    pub fn g_derivative(&self, order: u8) -> Result<f64> {
        gamma_te_derivatives_with_nodes(self.chi_hat_over_d, 1.0, order, self.quadrature_nodes)
    }
}

#[derive(Clone, Copy)]
enum Order {
    Value,
    First,
    Second,
}

fn check_geometry(chi_hat: f64, d: f64, nodes: usize) -> Result<()> {
    if chi_hat.is_nan() || chi_hat < 0.0 {
        return Err(invalid("chi_hat", "plate strength must be >= 0"));
    }
    if !(d > 0.0) || !d.is_finite() {
        return Err(invalid("d", "separation must be positive and finite"));
    }
    if nodes < 32 {
        return Err(invalid("nodes", format!("need at least 32 quadrature nodes, got {nodes}")));
    }
    Ok(())
}

fn converged(nodes: usize, eval: impl Fn(usize) -> f64) -> Result<f64> {
    let coarse = eval(nodes);
    let fine = eval(2 * nodes);
    let scale = fine.abs().max(1e-300);
    if ((fine - coarse) / scale).abs() > CONVERGENCE_TOL {
        return Err(Error::Numerical(format!(
            "plate quadrature not converged: {coarse:e} -> {fine:e} on node doubling from {nodes}"
        )));
    }
    Ok(fine)
}

/// Tensor Gauss--Legendre on the unit square via `p = 1 + q/(1-q)`,
/// `ξ = u/(1-u)`.
fn tensor_integral(c: f64, nodes: usize, order: Order) -> f64 {
    let rule = gauss_legendre(nodes);
    let (xs, ws) = (&rule.0, &rule.1);
    let mut total = 0.0;
    for (xu, wu) in xs.iter().zip(ws) {
        let u = 0.5 * (xu + 1.0);
        let one_mu = 1.0 - u;
        let xi = u / one_mu;
        let jac_xi = 1.0 / (one_mu * one_mu);
        let mut inner = 0.0;
        for (xq, wq) in xs.iter().zip(ws) {
            let q = 0.5 * (xq + 1.0);
            let one_mq = 1.0 - q;
            let p = 1.0 + q / one_mq;
            let jac_p = 1.0 / (one_mq * one_mq);
            inner += wq * jac_p * integrand(c, xi, p, order);
        }
        total += wu * jac_xi * xi * xi * inner * 0.5;
    }
    // the two 0.5 factors map [-1,1] -> [0,1] on each axis
    -(180.0 / std::f64::consts::PI.powi(4)) * total * 0.5
}

fn integrand(c: f64, xi: f64, p: f64, order: Order) -> f64 {
    let den = 2.0 * p + xi * c;
    let r = -xi * c / den;
    let rho = r * r;
    let decay = (-2.0 * p * xi).exp();
    match order {
        Order::Value => p * (-rho * decay).ln_1p(),
        Order::First => {
            let drho = 4.0 * p * xi * xi * c / den.powi(3);
            let one_minus = 1.0 - rho * decay;
            p * (-decay * drho / one_minus)
        }
        Order::Second => {
            let dr = -2.0 * p * xi / (den * den);
            let d2r = 4.0 * p * xi * xi / den.powi(3);
            let drho = 2.0 * r * dr;
            let d2rho = 2.0 * dr * dr + 2.0 * r * d2r;
            let one_minus = 1.0 - rho * decay;
            p * (-(decay * d2rho * one_minus + (decay * drho).powi(2)) / (one_minus * one_minus))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn reference_values() {
        // Independent high-precision evaluation of the double integral:
        assert_relative_eq!(gamma_te(1.0, 1.0, 64).unwrap(), 0.023191825843838, epsilon = 1e-10);
        assert_relative_eq!(gamma_te(1e3, 1.0, 64).unwrap(), 0.447604257608733, epsilon = 1e-10);
        assert_relative_eq!(gamma_te(1e-3, 1.0, 64).unwrap(), 6.91718548854e-8, epsilon = 1e-9);
        assert_eq!(gamma_te(0.0, 1.0, 64).unwrap(), 0.0);
        assert_eq!(gamma_te(f64::INFINITY, 1.0, 64).unwrap(), 0.5);
    }

    #[test]
    fn scale_invariance_in_chi_hat_over_d() {
        let a = gamma_te(2.0, 1.0, 64).unwrap();
        let b = gamma_te(1.0, 0.5, 64).unwrap();
        assert_relative_eq!(a, b, epsilon = 1e-12);
    }

    #[test]
    fn weak_coupling_ratio_converges_to_one() {
        let weak = |c: f64| 27.0 * c * c / (4.0 * std::f64::consts::PI.powi(4));
        let r3 = gamma_te(1e-3, 1.0, 64).unwrap() / weak(1e-3);
        let r4 = gamma_te(1e-4, 1.0, 64).unwrap() / weak(1e-4);
        assert!((r4 - 1.0).abs() < (r3 - 1.0).abs());
        assert!((r4 - 1.0).abs() < 1e-3);
    }

    #[test]
    fn monotone_increasing_and_bounded() {
        let mut prev = 0.0;
        for k in 0..12 {
            let c = 10f64.powf(k as f64 / 2.0 - 3.0);
            let g = gamma_te(c, 1.0, 64).unwrap();
            assert!(g > prev);
            assert!(g < 0.5);
            prev = g;
        }
    }

    #[test]
    fn derivative_matches_finite_difference_of_gamma() {
        // order 1 at chi_hat/d = 1 against a central difference of the
        // dimensional proxy G(d) = gamma(chi_hat/d)/d^3
        let chi_hat = 1.0;
        let d = 1.0;
        let delta = 1e-5 * d;
        let g = |dd: f64| gamma_te(chi_hat, dd, 64).unwrap() / dd.powi(3);
        let fd = (g(d + delta) - g(d - delta)) / (2.0 * delta);
        let analytic = gamma_te_derivatives(chi_hat, d, 1).unwrap();
        assert_relative_eq!(analytic, fd, epsilon = 1e-6);
        // order 2 cross-check with second difference
        let fd2 = (g(d + delta) - 2.0 * g(d) + g(d - delta)) / (delta * delta);
        let analytic2 = gamma_te_derivatives(chi_hat, d, 2).unwrap();
        assert_relative_eq!(analytic2, fd2, max_relative = 1e-4);
    }

    #[test]
    fn derivative_reference_values() {
        // frozen from the independent quadrature
        assert_relative_eq!(gamma_te_derivatives(1.0, 1.0, 1).unwrap(), -0.09865751418597, epsilon = 1e-9);
        assert_relative_eq!(gamma_te_derivatives(1.0, 1.0, 2).unwrap(), 0.51009058676249, epsilon = 1e-9);
        assert_eq!(gamma_te_derivatives(0.0, 1.0, 1).unwrap(), 0.0);
        assert_eq!(gamma_te_derivatives(0.0, 1.0, 2).unwrap(), 0.0);
    }

    #[test]
    fn parameter_errors() {
        assert!(gamma_te(1.0, 1.0, 16).is_err());
        assert!(gamma_te(-1.0, 1.0, 64).is_err());
        assert!(gamma_te(1.0, 0.0, 64).is_err());
        assert!(gamma_te_derivatives(1.0, 1.0, 3).is_err());
    }
}
