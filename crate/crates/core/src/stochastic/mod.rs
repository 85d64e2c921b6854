//! Random objects consumed by the engines.
//!
//! Everything here is pure given an [`RngStream`]: identical
//! `(seed, stream_id, parameters)` produce bit-identical output regardless of
//! scheduling, which is what makes the parallel ensembles reproducible.

mod bridge;
mod hermite_sampler;
mod lowdisc;
mod rng;

pub use bridge::{
    complete_path_after_prefix, generate_closed_bridge, generate_open_bridge, refine_segment,
    RefinedSegment, UnitBridge,
};
pub use hermite_sampler::{sample_hermite_endpoint, HermiteEndpointDraw, HermiteGaussianSampler};
pub use lowdisc::van_der_corput;
pub use rng::RngStream;
