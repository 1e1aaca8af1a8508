//! Edge-connected orientations of undirected multigraphs and single-edge
//! flip sequences between them.
//!
//! * [`multigraph`]: graphs, vertex sets, orientations;
//! * [`connectivity`]: max-flow, `λ`, tight-set families;
//! * [`flip_core`]: raising `λ` by flips that never lower it, and
//!   reconfiguration between `k`-edge-connected orientations;
//! * [`local_reach`]: exact reachability and shortest sequences between
//!   strong orientations;
//! * [`oracle`]: exhaustive reference implementations for small inputs.

pub mod connectivity;
pub mod error;
pub mod flip_core;
mod flow;
pub mod gen;
pub mod io;
pub mod local_reach;
pub mod multigraph;
pub mod oracle;

pub use error::{Error, Result};
pub use multigraph::{EdgeId, Orientation, UndirectedMultigraph, VertexId, VertexSet, ROOT};
