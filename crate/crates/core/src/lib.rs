//! Discrete configuration spaces of graphs: cell complexes, integer homology,
//! connectivity-based predictions of `H1`, topological gauge potentials and
//! spanning sets of cycles built from a spanning tree.

pub mod configspace;
pub mod connectivity;
pub mod families;
pub mod gauge;
pub mod graph;
pub mod homology;
pub mod spanning;
