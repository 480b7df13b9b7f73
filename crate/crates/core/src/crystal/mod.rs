//! The Misra-Miwa crystal `reg` and the ladder crystal `ladd` on partitions,
//! graph construction and export, and the exhaustive statement verifiers.

mod export;
mod graph;
mod signature;
pub mod verify;

pub use export::{to_dot, to_json, NodeFlags};
pub use graph::{
    build_crystal, check_isomorphism, check_isomorphism_of, is_node, ladder_node_of_class,
    CrystalGraph, Edge, IsomorphismReport,
};
pub use signature::{
    cells, e_op, e_pow, epsilon, f_op, f_pow, phi, reduce, reduced_signature, signature, Model,
    Sign, SignatureEntry, Word,
};
