use thiserror::Error;

use crate::flip_core::PartialReconfiguration;
use crate::local_reach::Obstruction;
use crate::multigraph::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("orientations belong to different underlying graphs")]
    GraphMismatch,
    #[error("vertex set ranges over {found} vertices, graph has {expected}")]
    VertexSetMismatch { expected: usize, found: usize },
    #[error("source and sink coincide")]
    SameVertex,
    #[error("graph needs at least two vertices")]
    TooSmall,
    #[error("orientation is not strongly connected")]
    NotStronglyConnected,
    #[error("orientation has edge-connectivity {lambda}, need at least {k}")]
    NotKConnected { k: usize, lambda: usize },
    #[error("orientation has edge-connectivity {lambda}, need at least {required}")]
    NotKPlus1Connected { required: usize, lambda: usize },
    #[error("underlying graph has edge-connectivity {actual}, need at least {required}")]
    UnderlyingConnectivityTooLow { required: usize, actual: usize },
    #[error("connectivity level k = {0} is not supported by this operation")]
    InvalidLevel(usize),
    #[error("vertex set is not an inclusionwise minimal tight set")]
    NotMinimalTightSet,
    #[error("vertex set is not a tight in-set")]
    NotTightSet,
    #[error("orientation is already (k+1)-edge-connected")]
    AlreadyTight,
    #[error("edge sequence is not a directed path or cycle (at position {0})")]
    NotAPath(usize),
    #[error("edge {0} is not an arc of the orientation in the expected direction")]
    ArcMismatch(EdgeId),
    #[error("orientations are separated by {0}")]
    Obstructed(Obstruction),
    #[error("middle search exceeded its node cap of {}", .0.node_cap)]
    MiddleSearchTooLarge(Box<PartialReconfiguration>),
    #[error("{what} exceeds cap ({size} > {cap})")]
    TooLarge { what: &'static str, size: usize, cap: usize },
    #[error("orientation is not a node of the flip graph")]
    NodeNotFound,
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolated(String),
}

impl Error {
    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::InternalInvariantViolated(msg.into())
    }
}
