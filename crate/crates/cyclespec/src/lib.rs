//! Cycle spectra of finite simple graphs, with a focus on claw-free
//! hamiltonian graphs.
//!
//! The crate computes exact cycle spectra by subset dynamic programming,
//! recognizes the structure that claw-freeness forces around a vertex,
//! generates a tight extremal family of claw-free hamiltonian graphs,
//! and certifies spectrum lower bounds constructively: every claimed
//! cycle length comes with an explicit, edge-verified cycle.
//!
//! See the `book/` guide at the repository root for a narrative tour;
//! its code listings run as doctests of this crate.

pub mod certify;
pub mod constructions;
pub mod graph;
pub mod graph6;
pub mod hamilton;
pub mod recognition;
pub mod spectrum;

mod book;

pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::{decode_graph6, encode_graph6, Graph6Error};
