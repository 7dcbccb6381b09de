//! Neighborhood-perfectness recognition and optimal neighborhood sets for
//! P4-tidy graphs and tree-cographs, driven by modular decomposition.

pub mod cli;
pub mod decomp;
pub mod family;
pub mod graph;
pub mod hardness;
pub mod optimal;
pub mod oracle;
pub mod recognition;
pub mod sets;
pub mod structure;
pub mod treekit;

pub use decomp::{decompose, MdTree, NodeId, NodeKind};
pub use family::FamilySpec;
pub use graph::{Edge, Graph};
