//! Error functions and Gauss--Legendre nodes.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Complementary error function.
pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// Error function.
pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

/// Scaled complementary error function `erfcx(x) = exp(x^2) erfc(x)`.
///
/// Evaluated without forming `exp(x^2)`, so it stays finite for arguments
/// where the naive product overflows (`x` beyond ~27).  For moderate `x` the
/// direct product is exact enough; for large `x` the Laplace continued
/// fraction
///
/// ```text
/// erfcx(x) = (1/sqrt(pi)) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
/// ```
///
/// converges to full double precision.
pub fn erfcx(x: f64) -> f64 {
    if x < 0.0 {
        // Only needed for modest negative arguments; grows like 2 exp(x^2).
        return 2.0 * (x * x).exp() - erfcx(-x);
    }
    if x < 4.0 {
        return (x * x).exp() * libm::erfc(x);
    }
    // Bottom-up continued fraction with coefficients k/2.
    let mut f = 0.0;
    for k in (1..=40).rev() {
        f = (0.5 * k as f64) / (x + f);
    }
    1.0 / (std::f64::consts::PI.sqrt() * (x + f))
}

/// Nodes and weights of the `n`-point Gauss--Legendre rule on `[-1, 1]`.
///
/// Computed once by Newton iteration on the Legendre recurrence and cached;
/// the returned `Arc` is cheap to clone.
pub fn gauss_legendre(n: usize) -> Arc<(Vec<f64>, Vec<f64>)> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<(Vec<f64>, Vec<f64>)>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(compute_gauss_legendre(n)))
        .clone()
}

fn compute_gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess, then Newton.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let (mut p, mut dp) = legendre_and_derivative(n, x);
        for _ in 0..100 {
            let dx = -p / dp;
            x += dx;
            let (np, ndp) = legendre_and_derivative(n, x);
            p = np;
            dp = ndp;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        weights[i] = w;
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}
