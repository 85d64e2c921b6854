//! Worldline Monte Carlo engine for Casimir and Casimir--Polder energies.
//!
//! The crate computes vacuum interaction energies of a scalar field (the
//! transverse-electric polarization coupled to dielectrics) as functional
//! averages over closed Brownian paths, together with spatial derivatives of
//! those energies: forces, curvatures, and torques.  Two derivative methods
//! are implemented side by side:
//!
//! * pathwise finite differences, the straightforward baseline, and
//! * Hermite-weighted partial averaging, which reweights the path ensemble
//!   instead of differencing it and keeps the sample variance bounded in the
//!   continuum limit.
//!
//! Modules:
//!
//! * [`stochastic`] — Brownian-bridge generation, sub-path refinement,
//!   Hermite--Gaussian endpoint sampling, low-discrepancy sequences, and
//!   reproducible per-path RNG streams.
//! * [`analytic`] — closed-form oracles: Hermite polynomials, crossing
//!   probabilities, the half-space efficiency η_TE, the two-plate efficiency
//!   γ_TE with distance derivatives, and local-time statistics.
//! * [`cp_engine`] — atom--half-space potential and its source-point
//!   derivatives up to order 10.
//! * [`plates_engine`] — energy, force, curvature, and torque for two
//!   parallel delta-function plates via per-segment local-time kernels.
//! * [`stats`] — mergeable accumulators, deterministic parallel ensembles,
//!   parameter sweeps, and error-floor fits.

pub mod analytic;
pub mod cp_engine;
mod error;
pub mod plates_engine;
pub mod stats;
pub mod stochastic;

pub use error::{Error, Result};

/// Scalar type used throughout the crate.
pub type Real = f64;
