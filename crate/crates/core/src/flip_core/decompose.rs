use crate::connectivity::lambda_directed;
use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, Orientation, VertexId, VertexSet};

use super::FlipSequence;

/// Change of `(δ+(X), δ-(X))` when a path from `p` to `t` is reversed.
///
/// Reversing the path moves one unit of "outflow" from `p` to `t`, so only
/// sets separating the two endpoints change, by exactly one.
pub fn reversal_cut_change(x: &VertexSet, p: VertexId, t: VertexId) -> (i64, i64) {
    match (x.contains(p), x.contains(t)) {
        (true, false) => (-1, 1),
        (false, true) => (1, -1),
        _ => (0, 0),
    }
}

/// Checks that `edges` form a directed path or cycle of `d`: consecutive
/// arcs meet head to tail and no vertex repeats, except that the last head
/// may equal the first tail.
fn check_path(d: &Orientation, edges: &[EdgeId]) -> Result<()> {
    let n = d.n();
    let mut seen = vec![false; n];
    for (i, &e) in edges.iter().enumerate() {
        if e.0 >= d.m() {
            return Err(Error::EdgeOutOfRange { edge: e.0, m: d.m() });
        }
        let (tail, head) = d.arc(e);
        if i == 0 {
            seen[tail.0] = true;
        } else if d.arc(edges[i - 1]).1 != tail {
            return Err(Error::NotAPath(i));
        }
        let closes_cycle = i + 1 == edges.len() && head == d.arc(edges[0]).0;
        if seen[head.0] && !closes_cycle {
            return Err(Error::NotAPath(i));
        }
        seen[head.0] = true;
    }
    Ok(())
}

/// Reverses a directed path or cycle one arc at a time, in traversal
/// order, keeping every intermediate orientation `k`-edge-connected.
///
/// Requires `λ(D) >= k + 1`: any prefix of flipped arcs crosses each cut
/// at most once more in one direction than in the other.
pub fn decompose_path_flip(d: &Orientation, path_edges: &[EdgeId], k: usize) -> Result<FlipSequence> {
    check_path(d, path_edges)?;
    let lambda = lambda_directed(d)?;
    if lambda < k + 1 {
        return Err(Error::NotKPlus1Connected {
            required: k + 1,
            lambda,
        });
    }
    let mut seq = FlipSequence::default();
    let mut current = d.clone();
    for &e in path_edges {
        seq.push_certified(&mut current, e, k)?;
    }
    Ok(seq)
}
