//! Dynamic correlation networks for asset return panels.
//!
//! The crate estimates time-varying dependence between asset return series
//! with pairwise copula-DCC-GARCH models, filters each period's correlation
//! matrix into a minimum spanning tree, and tracks topological indices of
//! those trees (average path length, maximum degree, betweenness centrality,
//! power-law exponent of the degree distribution) as time series.
//!
//! The stages are usable on their own:
//!
//! * [`ingest`] — CSV price panels and log returns.
//! * [`marginal`] — ARMA-eGARCH marginal models with normal or skew-t
//!   innovations, fitted by maximum likelihood.
//! * [`copula_dcc`] — bivariate Student-t copulas with DCC(1,1) correlation
//!   dynamics on the probability-integral transforms.
//! * [`network`] — correlation-to-distance transform and Kruskal spanning
//!   trees.
//! * [`topology`] — per-tree indices and their time series.
//! * [`pipeline`] — the batch orchestrator behind the `risknet` binary, with
//!   content-addressed caching and deterministic parallelism.

pub mod ad;
pub mod dist;
pub mod error;
pub mod special;

pub use error::{Error, Result};
