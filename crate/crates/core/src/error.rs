use thiserror::Error;

use crate::graph::VertexId;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,

    #[error("edge endpoint {vertex} is out of range (n_a = {n_a}, n_b = {n_b})")]
    IndexOutOfRange { vertex: String, n_a: usize, n_b: usize },

    #[error("duplicate edge (a{0}, b{1})")]
    DuplicateEdge(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("search budget of {budget} exhausted before a decision")]
    BudgetExceeded { budget: u64 },

    #[error("exhaustive search proved that no qualifying ordering exists")]
    ProvablyNone,

    #[error("graph is not connected")]
    NotConnected,

    #[error("not a path: {0}")]
    NotAPath(String),

    #[error("no shortest {from}-{to} path is straight under the given ordering")]
    NoStraightShortestPath { from: VertexId, to: VertexId },

    #[error("vertex {0} has no neighbors")]
    IsolatedVertex(VertexId),

    #[error("{z} is adjacent to {x} and {y} but not to {w}")]
    ObservationViolated {
        x: VertexId,
        y: VertexId,
        z: VertexId,
        w: VertexId,
    },

    #[error("replacement breaks the path: {0}")]
    ReplacementBreaksPath(String),

    #[error("ordering is not biconvex for this graph")]
    OrderingNotBiconvex,

    #[error("ordering is not a straight ordering for this graph")]
    OrderingNotStraight,

    #[error("internal proof violation: {0}")]
    InternalProofViolation(String),

    #[error("edge set is not a tree: {0}")]
    NotATree(String),

    #[error("burning number exceeds k_max = {k_max}")]
    ExceedsKMax { k_max: usize },

    #[error("no schedule of length {bound} found (greedy needed {greedy_len})")]
    FallbackExhausted { greedy_len: usize, bound: usize },

    #[error("density must lie in (0, 1], got {0}")]
    InvalidDensity(f64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
