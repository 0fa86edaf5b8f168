//! Linear {2,3}-uniform hypergraphs, exact Berge path and cycle search, and
//! exhaustive verification of extremal bounds for Berge-path-free families.

pub mod constructions;
pub mod cycle_structure;
pub mod enumerator;
pub mod hg;
pub mod hypergraph;
pub mod oracle;
pub mod solver;

pub use hypergraph::{Hyperedge, HypergraphError, LinearHypergraph, ShadowGraph, VertexId};
pub use solver::{has_berge_path, longest_berge_cycle, longest_berge_path, BergeCycle, BergePath, Solver};
