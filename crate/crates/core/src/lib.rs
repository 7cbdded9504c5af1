//! Feasible regions of induced densities for (quantum) graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] — small simple graphs on bit-set rows, graph6, canonical
//!   labelling, and exact induced-subgraph counting.
//! * [`quantum`] — formal linear combinations of graphs, their densities and
//!   the binomial random graph baseline.
//! * [`constructions`] — explicit extremal host families.
//! * [`boundary`] — closed-form boundary curves and exact rational values.
//! * [`optimizer`] — limit densities in complete multipartite limit objects,
//!   optimisation over part profiles, envelopes and class merging.
//! * [`lab`] — exhaustive host enumeration, empirical region clouds, finite-n
//!   inequality verifiers and Monte-Carlo sampling.
//! * [`cli`] — the `feasreg` command line.

pub mod boundary;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod lab;
pub mod optimizer;
pub mod quantum;

pub use error::{Error, Result};
pub use graph::{Graph, IsoClass};
pub use quantum::QuantumGraph;
