//! Exact small-graph machinery around Hadwiger's conjecture: clique minors
//! and subdivisions, finite tree decompositions with axiom checks, the
//! decomposition-driven coloring, and an exhaustive verdict harness.

pub mod coloring;
pub mod error;
pub mod graph;
pub mod harness;
pub mod minors;
pub mod sample;
pub mod treedec;

pub use coloring::{chromatic_number, color_by_decomposition, order_vertices, verify_proper, Coloring, VertexOrder};
pub use error::{Error, Result};
pub use graph::{enumerate_graphs, Generator, Graph, VertexSet};
pub use minors::{
    find_clique_minor, find_subdivision, hadwiger_number, verify_clique_minor, MinorCertificate, SearchBudget,
    SearchOutcome, SubdivisionCertificate,
};
pub use treedec::{
    decompose, tree_path_set, verify_decomposition, width, RootedTree, Strategy, TreeDecomposition, WidthReport,
};
