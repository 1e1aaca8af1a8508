//! Edge-flip sequences that raise edge-connectivity without ever lowering it.
//!
//! The pipeline, bottom-up:
//!
//! * [`safe_source`] / [`safe_sink`] pick a vertex inside a minimal tight
//!   set whose deficiency-one crossing sets always contain a smaller tight
//!   set avoiding it;
//! * [`path_to_minimal_out`] / [`path_from_minimal_in`] find paths that
//!   never leave (enter) a tight out-set (in-set);
//! * [`choose_r_set`] and [`build_flip_path`] combine them into a path
//!   `P = Q1 · Q2` inside a minimal set `R`;
//! * [`improve_step`] flips `P` arc by arc from its sink end and strictly
//!   lowers the potential `val(D)`;
//! * [`augment_connectivity`] repeats until `D` is `(k+1)`-edge-connected,
//!   and [`orient_k_connected`] chains levels `λ(D), …, k`.
//!
//! [`decompose_path_flip`] and [`reconfigure_k`] cover reconfiguration
//! between two `k`-edge-connected orientations.

mod decompose;
mod improve;
mod paths;
mod reconfigure;
mod rset;
mod safe;

use serde::Serialize;

pub use decompose::{decompose_path_flip, reversal_cut_change};
pub use improve::{augment_connectivity, improve_step, orient_k_connected, ImproveStep};
pub use paths::{path_from_minimal_in, path_to_minimal_out, DiPath};
pub use reconfigure::{reconfigure_k, reconfigure_k_with_cap, PartialReconfiguration, DEFAULT_MIDDLE_NODE_CAP};
pub use rset::{build_flip_path, choose_r_set, RCase};
pub use safe::{safe_sink, safe_source};

use crate::connectivity::lambda_directed;
use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, Orientation, VertexId, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SafeKind {
    Source,
    Sink,
}

/// A safe source or sink together with the minimal tight set it lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SafeVertex {
    pub vertex: VertexId,
    pub set: VertexSet,
    pub kind: SafeKind,
}

/// The improving path `P = Q1 · Q2` from a safe source to a safe sink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipPath {
    /// `vertices[0]` is the safe source, the last entry the safe sink.
    pub vertices: Vec<VertexId>,
    /// `edges[i]` is the arc from `vertices[i]` to `vertices[i + 1]`.
    pub edges: Vec<EdgeId>,
    /// Index of the splice vertex `t'` where `Q1` ends and `Q2` begins.
    pub q1_end: usize,
    pub source: SafeVertex,
    pub sink: SafeVertex,
}

impl FlipPath {
    pub fn splice_vertex(&self) -> VertexId {
        self.vertices[self.q1_end]
    }

    /// Edges of `Q1`.
    pub fn q1_edges(&self) -> &[EdgeId] {
        &self.edges[..self.q1_end]
    }

    /// Edges of `Q2`.
    pub fn q2_edges(&self) -> &[EdgeId] {
        &self.edges[self.q1_end..]
    }
}

/// Ordered single-edge flips with the edge-connectivity after each flip.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FlipSequence {
    pub flips: Vec<EdgeId>,
    /// `lambdas[i]` is `λ` after applying `flips[..=i]`.
    pub lambdas: Vec<usize>,
    /// `val` after each completed improvement step, at that step's level.
    pub vals: Vec<usize>,
}

impl FlipSequence {
    pub fn len(&self) -> usize {
        self.flips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flips.is_empty()
    }

    pub fn extend(&mut self, other: FlipSequence) {
        self.flips.extend(other.flips);
        self.lambdas.extend(other.lambdas);
        self.vals.extend(other.vals);
    }

    /// Applies every flip to `start`.
    pub fn replay(&self, start: &Orientation) -> Result<Orientation> {
        let mut d = start.clone();
        for &e in &self.flips {
            d.flip_in_place(e)?;
        }
        Ok(d)
    }

    /// Flips `e` in `d` and records the new edge-connectivity, failing if it
    /// drops below `floor`.
    pub(crate) fn push_certified(&mut self, d: &mut Orientation, e: EdgeId, floor: usize) -> Result<()> {
        d.flip_in_place(e)?;
        let lambda = lambda_directed(d)?;
        if lambda < floor {
            return Err(Error::invariant(format!(
                "flipping edge {e} dropped edge-connectivity to {lambda} (< {floor})"
            )));
        }
        self.flips.push(e);
        self.lambdas.push(lambda);
        Ok(())
    }
}
