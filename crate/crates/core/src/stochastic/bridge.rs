//! Discrete Brownian bridges and sub-path refinement.
//!
//! A bridge over duration `t` with `N` steps is built by the forward
//! recursion
//!
//! ```text
//! B_j = sqrt(c_j Δt) z_j + c_j (B_{j-1} - b) + b,    c_j = (N-j)/(N-j+1),
//! ```
//!
//! with `B_0 = a`, `B_N = b`, `Δt = t/N`, and standard-normal deviates `z_j`.
//! The recursion produces exact joint samples of the bridge marginals, and
//! running its last `N-k` steps from a fixed prefix completes a partially
//! constructed path with the correct conditional law.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{invalid, Result};

/// A discrete Brownian bridge: exact samples `B_0..B_N` of a Wiener process
/// pinned at both ends, in units where the diffusion constant is one.
#[derive(Clone, Debug)]
pub struct UnitBridge {
    samples: Vec<f64>,
    n_steps: usize,
    endpoints: (f64, f64),
    duration: f64,
}

impl UnitBridge {
    /// All `N+1` samples, `samples[0] = a`, `samples[N] = b`.
    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    /// Number of steps `N`.
    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    /// Pinned endpoint values `(a, b)`.
    pub fn endpoints(&self) -> (f64, f64) {
        self.endpoints
    }

    /// Total duration `t`.
    pub fn duration(&self) -> f64 {
        self.duration
    }

    /// Step duration `Δt = t/N`.
    pub fn dt(&self) -> f64 {
        self.duration / self.n_steps as f64
    }
}

/// Fills `buf` with a bridge from `a` to `b`: `buf[0] = a`, `buf[n] = b`.
///
/// This is the allocation-free kernel behind the public generators; engines
/// call it with reusable scratch buffers.
pub(crate) fn fill_open_bridge<R: Rng + ?Sized>(
    buf: &mut Vec<f64>,
    a: f64,
    b: f64,
    n_steps: usize,
    duration: f64,
    rng: &mut R,
) {
    let n = n_steps;
    let dt = duration / n as f64;
    buf.clear();
    buf.reserve(n + 1);
    buf.push(a);
    let mut prev = a;
    for j in 1..n {
        let c = (n - j) as f64 / (n - j + 1) as f64;
        let z: f64 = rng.sample(StandardNormal);
        let x = (c * dt).sqrt() * z + c * (prev - b) + b;
        buf.push(x);
        prev = x;
    }
    buf.push(b);
}

/// Generates a closed bridge (`a = b = 0`) over `duration` in `n_steps`
/// steps.
///
/// # Errors
/// `n_steps < 2` or a non-positive/non-finite duration is a parameter error.
pub fn generate_closed_bridge<R: Rng + ?Sized>(
    n_steps: usize,
    duration: f64,
    rng: &mut R,
) -> Result<UnitBridge> {
    if n_steps < 2 {
        return Err(invalid("n_steps", format!("need at least 2 steps, got {n_steps}")));
    }
    check_duration(duration)?;
    let mut samples = Vec::new();
    fill_open_bridge(&mut samples, 0.0, 0.0, n_steps, duration, rng);
    Ok(UnitBridge {
        samples,
        n_steps,
        endpoints: (0.0, 0.0),
        duration,
    })
}

/// Generates an open bridge from `a` to `b` over `duration` in `n_steps`
/// steps.
///
/// With `n_steps = 1` the bridge is the forced segment `[a, b]` and no
/// deviates are consumed.
pub fn generate_open_bridge<R: Rng + ?Sized>(
    a: f64,
    b: f64,
    n_steps: usize,
    duration: f64,
    rng: &mut R,
) -> Result<UnitBridge> {
    if n_steps < 1 {
        return Err(invalid("n_steps", "need at least 1 step"));
    }
    check_duration(duration)?;
    let mut samples = Vec::new();
    fill_open_bridge(&mut samples, a, b, n_steps, duration, rng);
    Ok(UnitBridge {
        samples,
        n_steps,
        endpoints: (a, b),
        duration,
    })
}

/// Completes a path whose first `total_steps - steps_remaining` steps are
/// already fixed, ending at `prefix_end`.
///
/// The completion is an open bridge from `prefix_end` to `b` over
/// `steps_remaining` steps of `Δt = duration/total_steps` each; its recursion
/// coefficients are exactly the index-shifted coefficients of the full-path
/// recursion, so completing a path with no prefix reproduces the full bridge
/// law (and the same bits, for the same stream).
pub fn complete_path_after_prefix<R: Rng + ?Sized>(
    prefix_end: f64,
    b: f64,
    steps_remaining: usize,
    total_steps: usize,
    duration: f64,
    rng: &mut R,
) -> Result<UnitBridge> {
    if steps_remaining < 1 || steps_remaining > total_steps {
        return Err(invalid(
            "steps_remaining",
            format!("need 1 <= steps_remaining <= total_steps, got {steps_remaining}/{total_steps}"),
        ));
    }
    check_duration(duration)?;
    let sub_duration = duration * steps_remaining as f64 / total_steps as f64;
    generate_open_bridge(prefix_end, b, steps_remaining, sub_duration, rng)
}

/// A finer resampling of one bridge segment.
#[derive(Clone, Debug)]
pub struct RefinedSegment {
    /// Index `j` of the refined segment in the parent bridge.
    pub parent_index: usize,
    /// Sub-samples, `sub_samples[0] = B_j` and `sub_samples[M] = B_{j+1}`.
    pub sub_samples: Vec<f64>,
    /// Duration of the refined span (one parent step).
    pub sub_duration: f64,
}

impl RefinedSegment {
    /// Smallest sub-sample (includes both endpoints).
    pub fn min(&self) -> f64 {
        self.sub_samples.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Largest sub-sample (includes both endpoints).
    pub fn max(&self) -> f64 {
        self.sub_samples.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Resamples segment `j` of `bridge` with `sub_steps` sub-steps.
///
/// The parent samples are unchanged; the sub-path is an open bridge between
/// `B_j` and `B_{j+1}` over one parent step `Δt`.
pub fn refine_segment<R: Rng + ?Sized>(
    bridge: &UnitBridge,
    j: usize,
    sub_steps: usize,
    rng: &mut R,
) -> Result<RefinedSegment> {
    if j >= bridge.n_steps() {
        return Err(invalid("j", format!("segment index {j} out of range 0..{}", bridge.n_steps())));
    }
    if sub_steps < 1 {
        return Err(invalid("sub_steps", "need at least 1 sub-step"));
    }
    let a = bridge.samples[j];
    let b = bridge.samples[j + 1];
    let dt = bridge.dt();
    let mut sub_samples = Vec::new();
    fill_open_bridge(&mut sub_samples, a, b, sub_steps, dt, rng);
    Ok(RefinedSegment {
        parent_index: j,
        sub_samples,
        sub_duration: dt,
    })
}

fn check_duration(duration: f64) -> Result<()> {
    if !(duration > 0.0) || !duration.is_finite() {
        return Err(invalid("duration", format!("need a positive finite duration, got {duration}")));
    }
    Ok(())
}
