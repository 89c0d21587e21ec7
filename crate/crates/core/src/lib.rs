//! Reconfiguration graphs of cliques.
//!
//! Builders for the token sliding, token jumping and token addition/removal
//! graphs of cliques, reconstruction of `TS_{k-1}(G)` from the unlabeled
//! `TJ_k(G)` at `k = ω(G)`, and checkers for their structural properties.
//!
//! ```
//! use cliquereconf_core::{reconf::build_ts, iso::are_isomorphic, families::johnson, Graph};
//!
//! let ts = build_ts(&Graph::complete(4), 2).unwrap();
//! assert!(are_isomorphic(ts.graph(), &johnson(4, 2).unwrap()));
//! ```

pub mod analysis;
pub mod clique;
pub mod coloring;
pub mod corpus;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod iso;
pub mod metric;
pub mod planar;
pub mod reconf;
pub mod reconstruct;
pub mod report;

#[cfg(test)]
mod testutil;

pub use analysis::Theorem;
pub use clique::Clique;
pub use corpus::CorpusFamily;
pub use error::{GraphError, ReconfError};
pub use graph::{Graph, Vertex};
pub use reconf::{LabeledReconfGraph, Rule};
pub use reconstruct::{Msets, NotKGood};
pub use report::Report;
