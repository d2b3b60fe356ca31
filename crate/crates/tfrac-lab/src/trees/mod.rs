//! Tree families: increasing binary trees, restricted ternary trees (RTs),
//! interval-labeled RTs (IRTs) and binary multilabeled trees, with
//! exhaustive enumerators, traversals and vertex statistics.

pub mod binary;
pub mod irt;
pub mod multilabeled;
pub mod rt;
pub mod samples;
pub mod traversal;

pub use binary::{enumerate_binary, for_each_binary, BinaryTree};
pub use irt::{enumerate_irt, for_each_irt, IrtTree, IrtVertex};
pub use multilabeled::{multilabeled_to_rt, rt_to_multilabeled, MlVertex, MultiLabeledBinaryTree};
pub use rt::{enumerate_rt, for_each_rt, RtTree};
pub use traversal::{
    all_vertex_stats, irt_vertex_stats, node_type_counts, node_type_string, traversal_order,
    vertex_stats, ArityMismatch, OrderedTree, Traversal, VertexStats,
};
