//! Principal pivot transform, dual pivot and Schur-complement contraction on
//! graphs over F2, together with the set systems they induce and the string
//! and graph reduction systems of gene assembly.
//!
//! A [`Graph`] is a symmetric 0/1 matrix with labelled vertices; a loop is a
//! 1 on the diagonal. All arithmetic is over F2.

pub mod cli;
pub mod error;
pub mod f2linalg;
pub mod geneassembly;
pub mod graph;
pub mod orbit;
pub mod pivot;
pub mod setsystem;
pub mod suite;

pub use error::{Error, Result};
pub use f2linalg::{
    add_identity, bases, determinant, eigenspace_one, induced_subgraph, kernel, nullity, rank,
    Subspace,
};
pub use geneassembly::{
    apply_graph_rule, apply_string_rule, complete_contractions, overlap_graph, parse_legal_string,
    verify_simulation, GraphRule, LegalString, StringRule, Symbol,
};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use orbit::{
    contraction_dag, dual_orbit, maximal_contraction_results, pivot_orbit, OrbitGraph,
};
pub use pivot::{contraction, decompose_pivot, dual_pivot, pivot, schur_complement};
pub use setsystem::{
    delta_matroid, maximal_family, minimal_family, reconstruct_graph, twist, SetSystem,
};
