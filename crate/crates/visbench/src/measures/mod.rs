//! PMFs, entropies, and the candidate divergence measures.

pub mod divergence;
pub mod pmf;

pub use divergence::{
    candidate_measures, cross_entropy, d_ncm, d_new, divergence, entropy, js, kl, minkowski,
    Decomposition, DivergenceSpec, MeasureFamily,
};
pub use pmf::{max_entropy, Pmf, PMF_SUM_TOLERANCE};
