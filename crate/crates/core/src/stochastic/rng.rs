//! Reproducible per-path random number streams.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Identifies one independent deviate stream: a run-level seed plus a
/// per-path stream id.
///
/// ChaCha in counter mode provides 2^64 independent streams per seed, each
/// with a 2^68-byte period.  Every path owns stream `stream_id = path index`,
/// so workers never share generator state.  Identical `(seed, stream_id)`
/// yield identical deviate sequences on every platform and thread layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RngStream {
    /// Run-level seed.
    pub seed: u64,
    /// Stream index, one per path.
    pub stream_id: u64,
}

impl RngStream {
    /// Creates the stream handle.
    pub fn new(seed: u64, stream_id: u64) -> Self {
        Self { seed, stream_id }
    }

    /// Instantiates the generator positioned at the start of this stream.
    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream_id);
        rng
    }
}
