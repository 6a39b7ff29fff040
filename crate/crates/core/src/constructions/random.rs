use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::{check_probability, ConstructionError};
use crate::colouring::PurpleColouring;
use crate::graph::{Graph, GraphBuilder};

/// Just below `e^-4`.
pub const DEFAULT_SUBSAMPLE_P: f64 = 0.018;

/// Seeded generator used by every randomised construction: ChaCha8 keyed
/// through `SeedableRng::seed_from_u64`, with the integer and float
/// conversions below done here so that outputs only depend on the
/// ChaCha8 stream.
pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> SeededRng {
        SeededRng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `0..bound` (rejection sampling, no modulo bias).
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let zone = u64::MAX - (u64::MAX - bound + 1) % bound;
        loop {
            let x = self.next_u64();
            if x <= zone {
                return x % bound;
            }
        }
    }

    /// Uniform float in `[0, 1)` with 53 random bits.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        if p >= 1.0 {
            true
        } else {
            self.unit() < p
        }
    }
}

/// Each edge of `g` turns purple independently with probability `p`; the
/// rest of `g` is red and the complement blue. Edges are visited in
/// lexicographic order.
pub fn subsample_colouring(g: &Graph, p: f64, seed: u64) -> Result<PurpleColouring, ConstructionError> {
    check_probability(p)?;
    let mut rng = SeededRng::new(seed);
    let mut red = GraphBuilder::new(g.n())?;
    let mut purple = GraphBuilder::new(g.n())?;
    for (u, v) in g.edges() {
        if rng.bernoulli(p) {
            purple.add_edge(u, v)?;
        } else {
            red.add_edge(u, v)?;
        }
    }
    Ok(PurpleColouring::from_red_purple(red.build(), purple.build())?)
}
