//! Physicists' Hermite polynomials.
//!
//! Convention: `d^n/dx^n exp(-x^2) = (-1)^n H_n(x) exp(-x^2)`, so
//! `H_0 = 1`, `H_1 = 2x`, and `H_{n+1} = 2x H_n - 2n H_{n-1}`.

use crate::error::{invalid, Result};

/// Highest supported order.
pub const MAX_HERMITE_ORDER: usize = 12;

/// Evaluates `H_n(x)` by the stable upward recurrence.
///
/// Orders above [`MAX_HERMITE_ORDER`] are a parameter error.
pub fn hermite(n: usize, x: f64) -> Result<f64> {
    if n > MAX_HERMITE_ORDER {
        return Err(invalid("n", format!("Hermite order {n} exceeds supported maximum {MAX_HERMITE_ORDER}")));
    }
    Ok(hermite_unchecked(n, x))
}

pub(crate) fn hermite_unchecked(n: usize, x: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => 2.0 * x,
        _ => {
            let mut h0 = 1.0;
            let mut h1 = 2.0 * x;
            for k in 1..n {
                let h2 = 2.0 * x * h1 - 2.0 * k as f64 * h0;
                h0 = h1;
                h1 = h2;
            }
            h1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn low_order_values() {
        for x in [-2.5, 0.0, 0.3, 1.7] {
            assert_eq!(hermite(0, x).unwrap(), 1.0);
            assert_relative_eq!(hermite(1, x).unwrap(), 2.0 * x);
        }
        assert_relative_eq!(hermite(2, 0.0).unwrap(), -2.0);
    }

    #[test]
    fn quartic_against_direct_polynomial() {
        // H_4(x) = 16x^4 - 48x^2 + 12; at x = 1.5: 81 - 108 + 12 = -15.
        let x = 1.5;
        assert_relative_eq!(hermite(4, x).unwrap(), 16.0 * x.powi(4) - 48.0 * x * x + 12.0);
        assert_relative_eq!(hermite(4, 1.5).unwrap(), -15.0);
    }

    #[test]
    fn order_limit() {
        assert!(hermite(12, 0.4).is_ok());
        assert!(hermite(13, 0.4).is_err());
    }
}
