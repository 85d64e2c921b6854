//! Local-time statistics of a pinned Wiener path at a fixed level.
//!
//! For a Wiener process with `y(0) = a`, `y(t) = b`, the local time
//! `ℓ = ∫₀ᵗ δ(y(τ) − d) dτ` at the level `d` has the mixed law
//!
//! ```text
//! f_ℓ(x) = [1 − e^{((b−a)² − h²)/2t}] δ(x − 0⁺)
//!        + (1/t)(x + h) e^{((b−a)² − (x+h)²)/2t},        h = |a−d| + |b−d|,
//! ```
//!
//! (see Borodin & Salminen, Handbook of Brownian Motion) and the moment
//! generating function
//!
//! ```text
//! E[e^{−sℓ}] = 1 − sqrt(πt/2) s e^{((b−a)² − h²)/2t} erfcx((h + st)/sqrt(2t)).
//! ```
//!
//! The scaled complementary error function keeps the evaluation finite where
//! the textbook form `exp(...) erfc(...)` overflows (s t ≳ 40).  These
//! kernels are what the two-plate engine multiplies per path segment, and
//! their `d`-derivatives supply the force and curvature weights.

use crate::error::{Error, Result};

use super::special::erfcx;

/// Parameters of one pinned segment and the transform variable.
#[derive(Clone, Copy, Debug)]
pub struct LocalTimeParams {
    /// Start value `y(0)`.
    pub a: f64,
    /// End value `y(t)`.
    pub b: f64,
    /// Level (boundary position) at which local time is measured.
    pub d: f64,
    /// Segment duration, `t > 0`.
    pub t: f64,
    /// Conjugate variable of the transform, `s >= 0`.
    pub s: f64,
}

impl LocalTimeParams {
    fn h(&self) -> f64 {
        (self.a - self.d).abs() + (self.b - self.d).abs()
    }

    fn assert_valid(&self) {
        assert!(self.t > 0.0, "local time needs t > 0");
        assert!(self.s >= 0.0, "local time transform needs s >= 0");
    }
}

/// Value of the local-time law at `x >= 0`: the continuous density together
/// with the weight of the atom at `x = 0⁺`.
#[derive(Clone, Copy, Debug)]
pub struct LocalTimeDensity {
    /// Probability that the path never reaches the level (`ℓ = 0`).
    pub atom_weight: f64,
    /// Continuous part of the density at the queried `x`.
    pub continuous: f64,
}

/// Evaluates the local-time law of `p` at `x >= 0`.
pub fn local_time_density(p: &LocalTimeParams, x: f64) -> LocalTimeDensity {
    p.assert_valid();
    assert!(x >= 0.0, "local time is nonnegative");
    let h = p.h();
    let gap = (p.b - p.a).powi(2);
    let atom_weight = 1.0 - ((gap - h * h) / (2.0 * p.t)).exp();
    let continuous = (x + h) / p.t * ((gap - (x + h).powi(2)) / (2.0 * p.t)).exp();
    LocalTimeDensity { atom_weight, continuous }
}

/// Moment generating function `E[e^{−sℓ}]`, a value in `(0, 1]`.
pub fn local_time_mgf(p: &LocalTimeParams) -> f64 {
    p.assert_valid();
    mgf_from_h(p.h(), (p.b - p.a).powi(2), p.t, p.s)
}

/// Analytic derivative of [`local_time_mgf`] with respect to the level `d`,
/// of order 1 or 2.
///
/// The dependence on `d` enters through `h = |a−d| + |b−d|`, so the result
/// is piecewise in the signs of `a−d` and `b−d`; evaluation exactly at
/// `a = d` or `b = d` is a singular-input error.
pub fn local_time_mgf_dd(p: &LocalTimeParams, order: u8) -> Result<f64> {
    p.assert_valid();
    if p.a == p.d || p.b == p.d {
        return Err(Error::SingularInput(format!(
            "mgf derivative undefined at the kink: a={}, b={}, d={}",
            p.a, p.b, p.d
        )));
    }
    let h_d = -((p.a - p.d).signum() + (p.b - p.d).signum());
    let (m1, m2) = mgf_h_derivatives(p.h(), (p.b - p.a).powi(2), p.t, p.s);
    match order {
        1 => Ok(m1 * h_d),
        2 => Ok(m2 * h_d * h_d),
        _ => Err(Error::InvalidParameter {
            name: "order",
            message: format!("derivative order must be 1 or 2, got {order}"),
        }),
    }
}

/// Kernel value together with its first derivative in the level position,
/// sharing one `erfcx` evaluation.  Hot path of the plates engine.
pub(crate) fn mgf_value_and_dlevel(a: f64, b: f64, level: f64, t: f64, s: f64) -> (f64, f64) {
    let h = (a - level).abs() + (b - level).abs();
    let gap = (b - a) * (b - a);
    let expo = ((gap - h * h) / (2.0 * t)).exp();
    let scaled = erfcx((h + s * t) / (2.0 * t).sqrt());
    let pref = (std::f64::consts::PI * t / 2.0).sqrt() * s;
    let value = 1.0 - pref * expo * scaled;
    let m1 = s * expo * (1.0 - pref * scaled);
    let h_level = -((a - level).signum() + (b - level).signum());
    (value, m1 * h_level)
}

/// Kernel in the perfect-mirror limit `s → ∞`: the probability that the
/// segment never touches the level given its endpoints.
pub(crate) fn no_touch_probability(a: f64, b: f64, level: f64, t: f64) -> f64 {
    if (a - level) * (b - level) <= 0.0 {
        return 0.0;
    }
    let h = (a - level).abs() + (b - level).abs();
    let gap = (b - a) * (b - a);
    1.0 - ((gap - h * h) / (2.0 * t)).exp()
}

fn mgf_from_h(h: f64, gap: f64, t: f64, s: f64) -> f64 {
    let expo = ((gap - h * h) / (2.0 * t)).exp();
    let scaled = erfcx((h + s * t) / (2.0 * t).sqrt());
    1.0 - (std::f64::consts::PI * t / 2.0).sqrt() * s * expo * scaled
}

/// First and second derivatives of the MGF with respect to `h`.
fn mgf_h_derivatives(h: f64, gap: f64, t: f64, s: f64) -> (f64, f64) {
    let expo = ((gap - h * h) / (2.0 * t)).exp();
    let xi = (h + s * t) / (2.0 * t).sqrt();
    let scaled = erfcx(xi);
    let pref = (std::f64::consts::PI * t / 2.0).sqrt() * s;
    let m1 = s * expo * (1.0 - pref * scaled);
    let m2 = s * expo * (s - h / t - pref * s * scaled);
    (m1, m2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::gauss_legendre;
    use approx::assert_relative_eq;

    fn quad<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, nodes: usize) -> f64 {
        let rule = gauss_legendre(nodes);
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        rule.0
            .iter()
            .zip(&rule.1)
            .map(|(x, w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }

    #[test]
    fn atom_weight_example() {
        // a=b=0, d=1, t=1: 1 - e^{-2}
        let p = LocalTimeParams { a: 0.0, b: 0.0, d: 1.0, t: 1.0, s: 0.0 };
        let v = local_time_density(&p, 0.0);
        assert_relative_eq!(v.atom_weight, 1.0 - (-2.0f64).exp(), epsilon = 1e-14);
        // continuous part at x=0: (1/t) h exp((gap - h^2)/2t)
        assert_relative_eq!(v.continuous, 2.0 * (-2.0f64).exp(), epsilon = 1e-14);
    }

    #[test]
    fn density_normalizes_to_one() {
        for (a, b, d, t) in [
            (0.0, 0.0, 1.0, 1.0),
            (0.2, -0.4, 0.1, 0.5),
            (1.0, 2.0, 0.0, 2.0),
            (-0.3, -0.3, -0.35, 0.05),
        ] {
            let p = LocalTimeParams { a, b, d, t, s: 0.0 };
            let atom = local_time_density(&p, 0.0).atom_weight;
            let h = (a - d).abs() + (b - d).abs();
            let hi = h + 12.0 * t.sqrt();
            let mass = quad(|x| local_time_density(&p, x).continuous, 0.0, hi, 256);
            assert!((atom + mass - 1.0).abs() < 1e-10, "mass {} at {:?}", atom + mass, (a, b, d, t));
        }
    }

    #[test]
    fn mgf_reference_value() {
        // a=b=d, s sqrt(t) = 1: 1 - sqrt(pi/2) e^{1/2} erfc(1/sqrt 2)
        let p = LocalTimeParams { a: 0.5, b: 0.5, d: 0.5, t: 4.0, s: 0.5 };
        assert_relative_eq!(local_time_mgf(&p), 0.34432045758120153, epsilon = 1e-12);
        // s = 0 gives exactly 1
        let p0 = LocalTimeParams { s: 0.0, ..p };
        assert_eq!(local_time_mgf(&p0), 1.0);
    }

    #[test]
    fn mgf_no_overflow_for_large_st() {
        let p = LocalTimeParams { a: 0.1, b: 0.2, d: 0.0, t: 1.0, s: 1e6 };
        let v = local_time_mgf(&p);
        assert!(v.is_finite() && v > 0.0 && v <= 1.0);
    }

    #[test]
    fn mgf_matches_density_transform() {
        // ∫ e^{-s x} f_cont(x) dx + atom = mgf, to 1e-8, over a parameter grid
        for a in [-0.2, 0.0, 0.4] {
            for b in [-0.1, 0.3] {
                for d in [0.0, 0.15, -0.5] {
                    for t in [0.05, 0.4, 2.0] {
                        for s in [0.0, 0.7, 3.0] {
                            let p = LocalTimeParams { a, b, d, t, s };
                            let atom = local_time_density(&p, 0.0).atom_weight;
                            let h = (a - d).abs() + (b - d).abs();
                            let hi = h + 14.0 * t.sqrt();
                            let integral = quad(
                                |x| (-s * x).exp() * local_time_density(&p, x).continuous,
                                0.0,
                                hi,
                                384,
                            );
                            let direct = local_time_mgf(&p);
                            assert!(
                                (atom + integral - direct).abs() < 1e-8,
                                "transform mismatch at {:?}: {} vs {}",
                                (a, b, d, t, s),
                                atom + integral,
                                direct
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mgf_monotone_in_s_and_distance() {
        let base = LocalTimeParams { a: 0.3, b: -0.2, d: 0.0, t: 1.0, s: 1.0 };
        let mut prev = 1.0;
        for k in 0..8 {
            let p = LocalTimeParams { s: k as f64, ..base };
            let v = local_time_mgf(&p);
            assert!(v <= prev + 1e-15);
            prev = v;
        }
        // moving the level away increases the mgf
        let near = local_time_mgf(&LocalTimeParams { d: 0.1, ..base });
        let far = local_time_mgf(&LocalTimeParams { d: 5.0, ..base });
        assert!(far > near);
    }

    #[test]
    fn mgf_dd_matches_finite_difference() {
        let p = LocalTimeParams { a: 0.2, b: 0.3, d: 0.0, t: 0.05, s: 1.0 };
        let delta = 1e-6;
        let up = local_time_mgf(&LocalTimeParams { d: p.d + delta, ..p });
        let dn = local_time_mgf(&LocalTimeParams { d: p.d - delta, ..p });
        let fd = (up - dn) / (2.0 * delta);
        let analytic = local_time_mgf_dd(&p, 1).unwrap();
        assert_relative_eq!(analytic, fd, max_relative = 1e-6);
        let mid = local_time_mgf(&p);
        let fd2 = (up - 2.0 * mid + dn) / (delta * delta);
        let analytic2 = local_time_mgf_dd(&p, 2).unwrap();
        assert_relative_eq!(analytic2, fd2, max_relative = 1e-3);
    }

    #[test]
    fn mgf_dd_zero_at_s_zero_and_odd_under_reflection() {
        let p = LocalTimeParams { a: 0.2, b: 0.5, d: 0.0, t: 1.0, s: 0.0 };
        assert_eq!(local_time_mgf_dd(&p, 1).unwrap(), 0.0);
        assert_eq!(local_time_mgf_dd(&p, 2).unwrap(), 0.0);

        let p1 = LocalTimeParams { a: 0.2, b: 0.5, d: 0.0, t: 1.0, s: 2.0 };
        let refl = LocalTimeParams { a: -0.2, b: -0.5, ..p1 };
        let v = local_time_mgf_dd(&p1, 1).unwrap();
        let vr = local_time_mgf_dd(&refl, 1).unwrap();
        assert_relative_eq!(v, -vr, epsilon = 1e-14);
    }

    #[test]
    fn mgf_dd_singular_at_kink() {
        let p = LocalTimeParams { a: 0.0, b: 0.5, d: 0.0, t: 1.0, s: 1.0 };
        assert!(matches!(local_time_mgf_dd(&p, 1), Err(Error::SingularInput(_))));
    }

    #[test]
    fn no_touch_probability_limits() {
        // crossing segment: touch is certain
        assert_eq!(no_touch_probability(-0.5, 0.5, 0.0, 1.0), 0.0);
        // same-side segment matches the atom weight of the density
        let p = LocalTimeParams { a: 0.4, b: 0.6, d: 0.0, t: 0.3, s: 0.0 };
        assert_relative_eq!(
            no_touch_probability(0.4, 0.6, 0.0, 0.3),
            local_time_density(&p, 0.0).atom_weight,
            epsilon = 1e-14
        );
        // mgf tends to the no-touch probability as s grows
        let s_large = LocalTimeParams { a: 0.4, b: 0.6, d: 0.0, t: 0.3, s: 1e8 };
        assert_relative_eq!(
            local_time_mgf(&s_large),
            no_touch_probability(0.4, 0.6, 0.0, 0.3),
            max_relative = 1e-3
        );
    }
}
