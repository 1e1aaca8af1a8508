//! Reachability between strong orientations.
//!
//! Two strongly connected orientations of the same graph are joined by
//! single flips through strong orientations unless some 2-edge-cut has
//! both of its edges reversed between them. Such a cut is an
//! [`Obstruction`]: every strong orientation crosses the cut once in each
//! direction, so neither edge can be flipped first. Without one, flipping
//! differing edges greedily always succeeds and the sequence is as short
//! as possible.

use std::fmt;

use crate::error::{Error, Result};
use crate::flip_core::FlipSequence;
use crate::multigraph::{EdgeId, Orientation, UndirectedMultigraph, VertexId, VertexSet};

/// A 2-edge-cut both of whose edges differ between the two orientations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    pub cut_edges: (EdgeId, EdgeId),
    /// The side of the cut that the first edge leaves in the first orientation.
    pub side: VertexSet,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "the 2-edge-cut {{{}, {}}} around {:?}",
            self.cut_edges.0, self.cut_edges.1, self.side
        )
    }
}

/// Edges `f` that are bridges of `G - skip` (with `skip = None`, of `G`).
fn bridges_without(g: &UndirectedMultigraph, skip: Option<EdgeId>) -> Vec<EdgeId> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut bridges = Vec::new();
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, edge used to enter it, next incidence position)
        let mut stack: Vec<(usize, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(top) = stack.last_mut() {
            let (u, via, pos) = *top;
            let incident = g.incident(VertexId(u));
            if pos < incident.len() {
                top.2 += 1;
                let e = incident[pos];
                if Some(e) == skip || Some(e) == via {
                    continue;
                }
                let (a, b) = g.endpoints(e);
                let w = if a.0 == u { b.0 } else { a.0 };
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let (Some(e), Some(&(p, _, _))) = (via, stack.last()) {
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        bridges.push(e);
                    }
                }
            }
        }
    }
    bridges.sort();
    bridges
}

/// All 2-edge-cuts `{e, f}` (`e < f`) of a graph without bridges, sorted.
///
/// `{e, f}` is a cut exactly when `f` is a bridge of `G - e`.
pub fn two_edge_cuts(g: &UndirectedMultigraph) -> Vec<(EdgeId, EdgeId)> {
    let mut cuts = Vec::new();
    for e in g.edge_ids() {
        for f in bridges_without(g, Some(e)) {
            if e < f {
                cuts.push((e, f));
            }
        }
    }
    cuts
}

/// Vertices reachable from `start` in `G` without the edges `e` and `f`.
fn side_without(g: &UndirectedMultigraph, e: EdgeId, f: EdgeId, start: VertexId) -> VertexSet {
    let mut seen = VertexSet::singleton(g.n(), start);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &x in g.incident(u) {
            if x == e || x == f {
                continue;
            }
            let (a, b) = g.endpoints(x);
            let w = if a == u { b } else { a };
            if !seen.contains(w) {
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    seen
}

/// Precomputed 2-edge-cuts of one graph, for many obstruction queries.
#[derive(Debug, Clone)]
pub struct ObstructionFinder {
    cuts: Vec<(EdgeId, EdgeId)>,
}

impl ObstructionFinder {
    pub fn new(g: &UndirectedMultigraph) -> Self {
        Self {
            cuts: two_edge_cuts(g),
        }
    }

    pub fn cuts(&self) -> &[(EdgeId, EdgeId)] {
        &self.cuts
    }

    /// Like [`find_obstruction`]; `d1` and `d2` must be orientations of the
    /// graph this finder was built for.
    pub fn find(&self, d1: &Orientation, d2: &Orientation) -> Result<Option<Obstruction>> {
        check_pair(d1, d2)?;
        Ok(self.find_unchecked(d1, d2))
    }

    fn find_unchecked(&self, d1: &Orientation, d2: &Orientation) -> Option<Obstruction> {
        let differs = |e: EdgeId| d1.is_reversed(e) != d2.is_reversed(e);
        let &(e, f) = self.cuts.iter().find(|&&(e, f)| differs(e) && differs(f))?;
        let (tail, _) = d1.arc(e);
        Some(Obstruction {
            cut_edges: (e, f),
            side: side_without(d1.graph(), e, f, tail),
        })
    }
}

fn check_pair(d1: &Orientation, d2: &Orientation) -> Result<()> {
    if !d1.same_graph(d2) {
        return Err(Error::GraphMismatch);
    }
    if !d1.is_strongly_connected() || !d2.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    Ok(())
}

/// The lexicographically first 2-edge-cut whose edges are both reversed
/// between `D1` and `D2`, if any. Both orientations must be strong.
pub fn find_obstruction(d1: &Orientation, d2: &Orientation) -> Result<Option<Obstruction>> {
    check_pair(d1, d2)?;
    Ok(ObstructionFinder::new(d1.graph()).find_unchecked(d1, d2))
}

/// A shortest flip sequence from `D1` to `D2` through strong orientations:
/// each step flips the lowest differing edge whose flip keeps the
/// orientation strong, so the length is `|diff(D1, D2)|`.
pub fn reconfigure_strong(d1: &Orientation, d2: &Orientation) -> Result<FlipSequence> {
    check_pair(d1, d2)?;
    let finder = ObstructionFinder::new(d1.graph());
    reconfigure_strong_with(&finder, d1, d2)
}

/// [`reconfigure_strong`] reusing precomputed cuts.
pub fn reconfigure_strong_with(
    finder: &ObstructionFinder,
    d1: &Orientation,
    d2: &Orientation,
) -> Result<FlipSequence> {
    check_pair(d1, d2)?;
    if let Some(ob) = finder.find_unchecked(d1, d2) {
        return Err(Error::Obstructed(ob));
    }
    let mut remaining = d1.diff(d2)?;
    let mut current = d1.clone();
    let mut seq = FlipSequence::default();
    while !remaining.is_empty() {
        let pos = remaining
            .iter()
            .position(|&e| {
                current.flip_in_place(e).expect("edge in range");
                let ok = current.is_strongly_connected();
                current.flip_in_place(e).expect("edge in range");
                ok
            })
            .ok_or_else(|| Error::invariant("no differing edge can be flipped"))?;
        let e = remaining.remove(pos);
        seq.push_certified(&mut current, e, 1)?;
    }
    Ok(seq)
}
