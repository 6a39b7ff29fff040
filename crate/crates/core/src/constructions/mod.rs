//! Explicit and randomised colouring constructions.

mod blowup;
mod product;
mod random;
mod report;
mod tfp;

use thiserror::Error;

use crate::colouring::{ColouringError, Violation};
use crate::graph::GraphError;

pub use blowup::{
    andrasfai, andrasfai_special_vertices, blow_up_colouring, blow_up_colouring_with_sizes, canonical_blowup,
    canonical_blowup_colouring, canonical_edge_count, turan_graph, BlowupPlan, CanonicalBlowupParams,
};
pub use product::{
    red_free_rectangle, sprinkled_even_colouring, strong_product_colouring, CrossPairReport, Sprinkled,
};
pub use random::{subsample_colouring, SeededRng, DEFAULT_SUBSAMPLE_P};
pub use report::{BoundCheck, ConstructionReport, Relation};
pub use tfp::{
    m_star, sublinear_params, tfp_blowup_colouring, tfp_two_phase_colouring, triangle_free_process, SublinearParams,
    TfpBlowup, TfpParams, TfpRun, TwoPhase, TFP_MAX_VERTICES,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstructionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
    #[error("{0}")]
    Parameter(String),
    #[error(
        "canonical blow-up needs kn/(3k-1) <= t < (k-1)n/(3k-4); with n = {n}, k = {k}: {lo:.4} <= {t} < {hi:.4} fails"
    )]
    CanonicalRange { n: usize, k: usize, t: usize, lo: f64, hi: f64 },
    #[error("blow-up to {n} vertices needs n >= {k}, the base graph's order")]
    BlowupTooSmall { n: usize, k: usize },
    #[error("probability {0} outside [0, 1]")]
    Probability(f64),
    #[error("{which} core is not free: {violation:?}")]
    CoreNotFree { which: &'static str, violation: Violation },
    #[error("triangle-free process stopped after {achieved} edges, {needed} needed")]
    Exhausted { achieved: usize, needed: usize },
    #[error("gamma = {gamma} must exceed 4(1+eps)/(1-eps) = {min}")]
    GammaTooSmall { gamma: f64, min: f64 },
}

pub(crate) fn check_probability(p: f64) -> Result<(), ConstructionError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(ConstructionError::Probability(p))
    }
}
