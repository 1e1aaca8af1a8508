use crate::connectivity::{
    lambda_directed, lambda_undirected, require_k_connected, require_underlying, tight_families_unchecked,
    TightFamilies,
};
use crate::error::{Error, Result};
use crate::multigraph::{strong_orientation, strong_skeleton, Orientation, VertexSet, ROOT};

use super::rset::{build_flip_path_unchecked, choose_r_set_from, RCase};
use super::{FlipPath, FlipSequence};

/// One improvement: the flips, the resulting orientation, and how the path
/// was chosen.
#[derive(Debug, Clone)]
pub struct ImproveStep {
    pub sequence: FlipSequence,
    pub orientation: Orientation,
    pub r_set: VertexSet,
    pub case: RCase,
    /// For case (b) the path lives in the reversed orientation.
    pub path: FlipPath,
}

/// One step with families already known; returns the families after it.
fn improve_step_from(d: &Orientation, fam: &TightFamilies) -> Result<(ImproveStep, TightFamilies)> {
    let k = fam.k;
    let (r_set, case) = choose_r_set_from(d, fam)?;
    let path = match case {
        RCase::A => build_flip_path_unchecked(d, &r_set, k)?,
        RCase::B => build_flip_path_unchecked(&d.reversed(), &r_set, k)?,
    };

    let mut sequence = FlipSequence::default();
    let mut current = d.clone();
    // flip from the sink end back to the source
    for &e in path.edges.iter().rev() {
        sequence.push_certified(&mut current, e, k)?;
    }
    let after = tight_families_unchecked(&current, k)?;
    if after.val >= fam.val {
        return Err(Error::invariant(format!(
            "val did not decrease ({} -> {})",
            fam.val, after.val
        )));
    }
    sequence.vals.push(after.val);
    Ok((
        ImproveStep {
            sequence,
            orientation: current,
            r_set,
            case,
            path,
        },
        after,
    ))
}

fn check_level(d: &Orientation, k: usize) -> Result<()> {
    if d.n() < 2 {
        return Err(Error::TooSmall);
    }
    require_k_connected(d, k)?;
    require_underlying(d.graph(), 2 * k + 2)
}

/// Flips one path `P` arc by arc from its sink end; every intermediate
/// orientation stays `k`-edge-connected and `val` strictly decreases.
///
/// Requires `k >= 1`, `λ(D) >= k`, `λ(G) >= 2k + 2` and `val(D) > 0`.
pub fn improve_step(d: &Orientation, k: usize) -> Result<ImproveStep> {
    if k == 0 {
        return Err(Error::InvalidLevel(0));
    }
    check_level(d, k)?;
    let fam = tight_families_unchecked(d, k)?;
    Ok(improve_step_from(d, &fam)?.0)
}

/// Flips towards a strong orientation: the disagreeing arcs of a strongly
/// connected spanning skeleton of a reference orientation.
fn augment_from_zero(d: &Orientation) -> Result<(FlipSequence, Orientation)> {
    let reference = strong_orientation(d.graph_arc())?;
    let mut seq = FlipSequence::default();
    let mut current = d.clone();
    for e in strong_skeleton(&reference, ROOT)? {
        if current.is_reversed(e) != reference.is_reversed(e) {
            seq.push_certified(&mut current, e, 0)?;
        }
    }
    if !current.is_strongly_connected() {
        return Err(Error::invariant("skeleton flips did not give a strong orientation"));
    }
    Ok((seq, current))
}

/// The augmentation together with the index just past each improvement step.
fn augment_unchecked(d: &Orientation, k: usize) -> Result<(FlipSequence, Orientation, Vec<usize>)> {
    if k == 0 {
        let (seq, out) = augment_from_zero(d)?;
        let ends = vec![seq.len()];
        return Ok((seq, out, ends));
    }
    let n = d.n();
    let mut seq = FlipSequence::default();
    let mut ends = Vec::new();
    let mut current = d.clone();
    let mut fam = tight_families_unchecked(d, k)?;
    let mut steps = 0;
    while !fam.is_saturated() {
        if steps == n * n {
            return Err(Error::invariant(format!("no convergence after {steps} improvement steps")));
        }
        let (step, after) = improve_step_from(&current, &fam)?;
        seq.extend(step.sequence);
        ends.push(seq.len());
        current = step.orientation;
        fam = after;
        steps += 1;
    }
    Ok((seq, current, ends))
}

/// Raises edge-connectivity from `k` to `k + 1` with every intermediate
/// orientation still `k`-edge-connected.
///
/// For `k = 0` the intermediates are unconstrained and the result is any
/// strong orientation reachable by flipping at most `2n - 2` skeleton arcs.
/// Requires `λ(D) >= k` and `λ(G) >= 2k + 2`.
pub fn augment_connectivity(d: &Orientation, k: usize) -> Result<(FlipSequence, Orientation)> {
    check_level(d, k)?;
    let (seq, out, _) = augment_unchecked(d, k)?;
    Ok((seq, out))
}

/// Flips `D` into a `k`-edge-connected orientation along a sequence whose
/// edge-connectivity never decreases.
///
/// Phases run for `p = λ(D), …, k-1`; each is cut at the first flip that
/// reaches `λ = p + 1`. Requires `λ(G) >= 2k`.
pub fn orient_k_connected(d: &Orientation, k: usize) -> Result<(FlipSequence, Orientation)> {
    if k == 0 {
        return Ok((FlipSequence::default(), d.clone()));
    }
    if d.n() < 2 {
        return Err(Error::TooSmall);
    }
    let lg = lambda_undirected(d.graph())?;
    if lg < 2 * k {
        return Err(Error::UnderlyingConnectivityTooLow {
            required: 2 * k,
            actual: lg,
        });
    }
    let mut seq = FlipSequence::default();
    let mut current = d.clone();
    let mut lambda = lambda_directed(d)?;
    while lambda < k {
        let p = lambda;
        let (phase, _, ends) = augment_unchecked(&current, p)?;
        let cut = phase
            .lambdas
            .iter()
            .position(|&l| l > p)
            .ok_or_else(|| Error::invariant(format!("phase {p} never raised edge-connectivity")))?
            + 1;
        let kept_vals = ends.iter().take_while(|&&end| end <= cut).count();
        let trimmed = FlipSequence {
            flips: phase.flips[..cut].to_vec(),
            lambdas: phase.lambdas[..cut].to_vec(),
            vals: phase.vals[..kept_vals.min(phase.vals.len())].to_vec(),
        };
        current = trimmed.replay(&current)?;
        lambda = *trimmed.lambdas.last().expect("cut keeps at least one flip");
        seq.extend(trimmed);
    }
    Ok((seq, current))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::gen;

    #[test]
    fn level_zero_reaches_strong_orientation() {
        let g = Arc::new(gen::cycle(3));
        // 0->1, 1->2, 0->2: acyclic
        let d = Orientation::from_bits(g, vec![false, false, true]).unwrap();
        let (seq, out) = augment_connectivity(&d, 0).unwrap();
        assert!(out.is_strongly_connected());
        assert!(seq.len() <= 4);
        assert_eq!(seq.replay(&d).unwrap(), out);
    }

    #[test]
    fn already_k_connected_gives_empty_sequence() {
        let d = Orientation::forward(Arc::new(gen::cycle(5)));
        let (seq, out) = orient_k_connected(&d, 1).unwrap();
        assert!(seq.is_empty());
        assert_eq!(out, d);
    }

    #[test]
    fn orient_doubled_k4_to_level_three() {
        let g = Arc::new(gen::complete(4).duplicated(2));
        let d = Orientation::forward(g);
        let (seq, out) = orient_k_connected(&d, 3).unwrap();
        assert!(lambda_directed(&out).unwrap() >= 3);
        assert!(seq.lambdas.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(seq.replay(&d).unwrap(), out);
    }

    #[test]
    fn rejects_thin_underlying_graph() {
        let d = Orientation::forward(Arc::new(gen::cycle(4)));
        assert!(matches!(
            orient_k_connected(&d, 2),
            Err(Error::UnderlyingConnectivityTooLow { required: 4, actual: 2 })
        ));
        assert!(matches!(improve_step(&d, 0), Err(Error::InvalidLevel(0))));
    }
}
