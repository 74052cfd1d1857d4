//! Exact tools for extremal problems on graphs without large cliques.

pub mod bits;
pub mod constructions;
pub mod graph;
pub mod invariants;
pub mod lambda;
pub mod saturation;
pub mod symmetrization;
pub mod tripartite;
