//! Vertex-critical (gem, co-gem)-free graphs.
//!
//! Every vertex-critical (gem, co-gem)-free graph is complete or a clique
//! expansion of `C5`. This crate builds and enumerates those graphs, tests
//! criticality from the definition with an exact coloring solver, and
//! certifies k-colorability of (gem, co-gem)-free inputs with checkable
//! witnesses.
//!
//! ```
//! use critgraph::expansion::count_table;
//!
//! assert_eq!(count_table(8), vec![1, 1, 2, 2, 4, 6, 11, 17]);
//! ```

pub mod catalog;
pub mod certify;
pub mod cli;
pub mod coloring;
pub mod criticality;
pub mod detectors;
pub mod expansion;
pub mod graph;
pub mod graph6;

pub use graph::{are_isomorphic, Graph, GraphError, VertexSet};
