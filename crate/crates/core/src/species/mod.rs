//! Labelled rooted trees, aromas (connected functional graphs, i.e. directed
//! cycles of rooted trees), aromatic forests, their canonical codes and
//! exhaustive enumeration.

mod aroma;
mod code;
mod enumerate;
mod forest;
mod text;
mod tree;

pub use aroma::{close_into_cycle, Aroma};
pub use code::{
    aroma_code, canonical_code_forest, forest_code, symmetry_order, tree_code, UnlabelledKey,
};
pub use enumerate::{
    enumerate_aromas, enumerate_rooted_trees, enumerate_unlabelled, forests_of_aromas_count,
    UnlabelledKind,
};
pub(crate) use code::{parse_tree_shape, Shape};
pub use forest::AromaticForest;
pub use text::{
    parse_aroma, parse_element, parse_forest, parse_tree, print_aroma, print_forest, print_tree,
    Element,
};
pub use tree::{MarkedTree, RootedTree};

/// Vertex colour used by bicomplex bases; everywhere else vertices are black.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colour {
    Black,
    White,
}
