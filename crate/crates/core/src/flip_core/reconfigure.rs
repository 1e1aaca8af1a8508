use crate::connectivity::{lambda_undirected, require_k_connected};
use crate::error::{Error, Result};
use crate::local_reach::reconfigure_strong;
use crate::multigraph::Orientation;
use crate::oracle::shortest_flip_path;

use super::improve::augment_connectivity;
use super::FlipSequence;

/// Default bound on orientations visited by the middle search.
pub const DEFAULT_MIDDLE_NODE_CAP: usize = 2_000_000;

/// What was computed before the middle search gave up: both augmentation
/// legs and the two `(k+1)`-edge-connected orientations they reach.
#[derive(Debug, Clone)]
pub struct PartialReconfiguration {
    /// Flips taking `D1` to `d1_prime`.
    pub first: FlipSequence,
    /// Flips taking `D2` to `d2_prime` (the final leg is their reversal).
    pub last: FlipSequence,
    pub d1_prime: Orientation,
    pub d2_prime: Orientation,
    pub node_cap: usize,
}

/// [`reconfigure_k_with_cap`] with the default node cap.
pub fn reconfigure_k(d1: &Orientation, d2: &Orientation, k: usize) -> Result<FlipSequence> {
    reconfigure_k_with_cap(d1, d2, k, DEFAULT_MIDDLE_NODE_CAP)
}

/// Single flips from `D1` to `D2` through `k`-edge-connected orientations.
///
/// Both ends are first raised to `(k+1)`-edge-connectivity; the two raised
/// orientations are then joined by a breadth-first search over
/// `k`-edge-connected orientations visiting at most `node_cap` of them,
/// and the second augmentation is replayed backwards.
/// Requires `λ(D1), λ(D2) >= k` and `λ(G) >= 2k + 2`.
///
/// For `k = 1` on graphs with `λ(G) < 4` the pipeline does not apply; the
/// exact method for strong orientations is used instead, which fails with
/// [`Error::Obstructed`] when no sequence exists.
pub fn reconfigure_k_with_cap(
    d1: &Orientation,
    d2: &Orientation,
    k: usize,
    node_cap: usize,
) -> Result<FlipSequence> {
    if !d1.same_graph(d2) {
        return Err(Error::GraphMismatch);
    }
    if d1.n() < 2 {
        return Err(Error::TooSmall);
    }
    require_k_connected(d1, k)?;
    require_k_connected(d2, k)?;
    let lg = lambda_undirected(d1.graph())?;
    if k == 1 && lg < 4 {
        return reconfigure_strong(d1, d2);
    }
    if lg < 2 * k + 2 {
        return Err(Error::UnderlyingConnectivityTooLow {
            required: 2 * k + 2,
            actual: lg,
        });
    }
    if d1 == d2 {
        return Ok(FlipSequence::default());
    }

    let (first, d1_prime) = augment_connectivity(d1, k)?;
    let (last, d2_prime) = augment_connectivity(d2, k)?;
    let middle = match shortest_flip_path(&d1_prime, &d2_prime, k, node_cap) {
        Ok(Some(path)) => path,
        Ok(None) => {
            return Err(Error::invariant(
                "raised orientations lie in different components of the flip graph",
            ))
        }
        Err(Error::TooLarge { .. }) => {
            return Err(Error::MiddleSearchTooLarge(Box::new(PartialReconfiguration {
                first,
                last,
                d1_prime,
                d2_prime,
                node_cap,
            })))
        }
        Err(e) => return Err(e),
    };

    let mut seq = FlipSequence::default();
    let mut current = d1.clone();
    let edges = first
        .flips
        .iter()
        .chain(&middle)
        .chain(last.flips.iter().rev())
        .copied();
    for e in edges {
        seq.push_certified(&mut current, e, k)?;
    }
    if current != *d2 {
        return Err(Error::invariant("reconfiguration did not end at the target"));
    }
    Ok(seq)
}
