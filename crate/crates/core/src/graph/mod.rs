//! Digraphs, graphs, and the structural machinery the classifiers rely on.

pub mod blocks;
pub mod branches;
pub mod components;
mod digraph;
pub mod enumerate;
pub mod families;
pub mod io;
pub mod minor;
pub mod shape;

pub use blocks::{blocks, is_nonseparable, BlockDecomposition};
pub use branches::{branches, longest_branch, split_at_branch, Branch, OplusSplit};
pub use components::{
    closure, condensation_and_terminals, strong_components, underlying_graph, weak_components,
    Condensation, Partition,
};
pub use digraph::{Digraph, Graph};
pub use enumerate::{canonical_form, enumerate_digraphs, is_isomorphic, CanonicalForm};
pub use io::{parse_digraph, write_digraph};
pub use shape::{
    bipartite_test, is_directed_bipartite, is_fan, recognize_shape, Bipartiteness, ShapeTag,
};
