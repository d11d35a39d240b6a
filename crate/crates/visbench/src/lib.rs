//! visbench: bounded divergence measures and an information-theoretic
//! cost-benefit toolkit for lossy depiction processes.
//!
//! The crate provides:
//!
//! * [`measures`] — PMFs over finite alphabets, Shannon/cross entropy, and
//!   five divergence families (KL, Jensen-Shannon, the bounded `new` and
//!   `ncm` candidates, Minkowski) with per-letter decompositions.
//! * [`benefit`] — alphabet compression, potential distortion, the bounded
//!   benefit formula, and cost-benefit ratios.
//! * [`scenarios`] — built-in case studies: the good/bad and A-D synthetic
//!   user scenarios, the arteries and iso-surface depiction alphabets, the
//!   metro walking-time alphabet with its answer bands, and a grid path
//!   enumerator.
//! * [`survey`] — ingestion and analysis of the two shipped survey data
//!   sets (per-question statistics, answer banding, per-surveyee benefit).
//! * [`mcda`] — the staged multi-criteria score table with eliminations,
//!   sums, and weighted ranking.
//! * [`report`] — CSV/Markdown tables and stacked-bar SVG output.
//! * [`reproduce`] — recomputes every built-in case-study table and checks
//!   it against its reference values.
//!
//! The `visbench` binary exposes all of this as subcommands; the `examples/`
//! directory shows one runnable example per capability.

pub mod benefit;
pub mod cli;
pub mod error;
pub mod mcda;
pub mod measures;
pub mod report;
pub mod reproduce;
pub mod scenarios;
pub mod survey;

pub use error::{Error, Result};
pub use measures::{DivergenceSpec, Pmf};
