//! Proper list packings of graphs.
//!
//! A proper `L`-packing of size `k` is a family of `k` proper list colorings
//! that pairwise disagree at every vertex. This crate builds packings of
//! complete graphs from any `m`-assignment with `m ≥ n` by list edge coloring
//! `K_{n,m}` with the kernel method, and provides exhaustive oracles that
//! compute `χ`, `χ_ℓ` and the list packing number `χ*_ℓ` of tiny graphs with
//! certificates.

pub mod color;
pub mod error;
pub mod galvin;
pub mod graph;
pub mod packer;
pub mod search;

pub use color::{Color, Coloring, ListAssignment, Packing, VerifyReport};
pub use error::{Error, Result};
pub use graph::{Bipartition, Edge, Graph, Label, VertexId};
pub use search::{Search, SearchBudget};
