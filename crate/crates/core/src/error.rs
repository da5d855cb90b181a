use thiserror::Error;

use crate::graph::{Edge, VertexId};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("complete bipartite graph needs two nonempty sides, got ({0}, {1})")]
    EmptySide(usize, usize),

    #[error("graph has no edges")]
    Edgeless,

    #[error("loop at vertex {0}")]
    Loop(VertexId),

    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: VertexId, n: usize },

    #[error("graph is not bipartite, odd cycle {cycle:?}")]
    NotBipartite { cycle: Vec<VertexId> },

    #[error("bipartition does not match graph: {0}")]
    BadBipartition(String),

    #[error("{what}: expected {expected} entries, found {found}")]
    DomainMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("empty color list at {0}")]
    EmptyList(String),

    #[error("color 0 is not a valid color (at {0})")]
    ZeroColor(String),

    #[error("list at {site} has {len} colors, need at least {needed}")]
    ListTooShort { site: String, len: usize, needed: usize },

    #[error("lists are not uniform in size")]
    NonUniformLists,

    #[error("packing size {m} is below the vertex count {n}; the construction needs m >= n")]
    UnsupportedRegime { n: usize, m: usize },

    #[error("packing must contain at least one coloring")]
    EmptyPacking,

    #[error("product graph has no vertex labelled {0}")]
    MissingLabel(String),

    #[error("graph too large for exhaustive search: {n} vertices, limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
