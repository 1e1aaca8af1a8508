use crate::connectivity::{
    delta, require_k_connected, require_underlying, set_cut, tight_families_unchecked, Direction,
    TightFamilies,
};
use crate::error::{Error, Result};
use crate::multigraph::{Orientation, VertexId, VertexSet, ROOT};

use super::paths::{path_from_minimal_in_unchecked, path_to_minimal_out_unchecked};
use super::safe::safe_vertex;
use super::{FlipPath, SafeKind, SafeVertex};

/// Which of the two symmetric conditions the chosen `R` satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RCase {
    /// `R ∈ F_in` and some `X ⊊ R` lies in `F_out`.
    A,
    /// `R ∈ F_out` and some `X ⊊ R` lies in `F_in`.
    B,
}

/// Smallest member of the `fam` family (`In` for `F_in`) containing `x`.
fn minimal_superset(d: &Orientation, fam: Direction, x: &VertexSet, k: usize) -> VertexSet {
    let n = d.n();
    match set_cut(d, fam, x, &VertexSet::singleton(n, ROOT), k + 1) {
        Some(c) if c.value == k => c.min_source_side,
        _ => VertexSet::full(n),
    }
}

pub(crate) fn choose_r_set_from(d: &Orientation, fam: &TightFamilies) -> Result<(VertexSet, RCase)> {
    if fam.is_saturated() {
        return Err(Error::AlreadyTight);
    }
    let k = fam.k;
    let mut best: Option<(usize, VertexSet, RCase)> = None;
    let families = [
        (&fam.f_out_min, Direction::In, RCase::A),
        (&fam.f_in_min, Direction::Out, RCase::B),
    ];
    for (minimal, wrap, case) in families {
        for x in minimal.iter().filter(|x| !x.is_full()) {
            let r = minimal_superset(d, wrap, x, k);
            let key = (r.len(), r, case);
            if best.as_ref().map_or(true, |b| key < *b) {
                best = Some(key);
            }
        }
    }
    let (_, r, case) = best.ok_or_else(|| Error::invariant("val > 0 but no proper tight set"))?;
    Ok((r, case))
}

/// An inclusionwise minimal `R` satisfying case (a) or (b), with its case.
///
/// Ties are broken by size, then by the vertex-set order, then case (a)
/// before case (b). Requires `λ(D) >= k` and `λ(G) >= 2k + 2`.
pub fn choose_r_set(d: &Orientation, k: usize) -> Result<(VertexSet, RCase)> {
    if d.n() < 2 {
        return Err(Error::TooSmall);
    }
    require_k_connected(d, k)?;
    require_underlying(d.graph(), 2 * k + 2)?;
    let fam = tight_families_unchecked(d, k)?;
    choose_r_set_from(d, &fam)
}

/// Whether some `X ∈ F_out` with `X ⊊ r_set` contains `v`.
fn covered(d: &Orientation, r_set: &VertexSet, v: VertexId, k: usize) -> bool {
    let n = d.n();
    if v == ROOT || !r_set.contains(v) {
        return false;
    }
    let mut sinks = r_set.complement();
    sinks.insert(ROOT);
    matches!(
        set_cut(d, Direction::Out, &VertexSet::singleton(n, v), &sinks, k + 1),
        Some(c) if c.value == k
    )
}

pub(crate) fn build_flip_path_unchecked(d: &Orientation, r_set: &VertexSet, k: usize) -> Result<FlipPath> {
    let t_star = r_set
        .iter()
        .find(|&v| covered(d, r_set, v, k))
        .ok_or(Error::NotTightSet)?;

    let (s_set, in_paths) = path_from_minimal_in_unchecked(d, t_star, k)?;
    let s = safe_vertex(d, &s_set, k, Direction::Out)?;
    let p_s = in_paths
        .get(&s)
        .ok_or_else(|| Error::invariant("safe source outside its tight in-set"))?;
    let q1_end = p_s
        .vertices
        .iter()
        .position(|&v| covered(d, r_set, v, k))
        .ok_or_else(|| Error::invariant("path to t* never enters a tight out-set inside R"))?;
    let q1 = p_s.prefix(q1_end);
    let t_prime = q1.end();

    let (t_set, out_paths) = path_to_minimal_out_unchecked(d, t_prime, k)?;
    let t = safe_vertex(d, &t_set, k, Direction::In)?;
    let q2 = out_paths
        .get(&t)
        .ok_or_else(|| Error::invariant("safe sink outside its tight out-set"))?;
    let p = q1.concat(q2);

    Ok(FlipPath {
        vertices: p.vertices,
        edges: p.edges,
        q1_end,
        source: SafeVertex {
            vertex: s,
            set: s_set,
            kind: SafeKind::Source,
        },
        sink: SafeVertex {
            vertex: t,
            set: t_set,
            kind: SafeKind::Sink,
        },
    })
}

/// The path `P = Q1 · Q2` inside `D[R]` for a set `R` in case (a).
///
/// `s` is a safe source of a minimal `S ∈ F_in` inside `R`; `Q1` runs from
/// `s` to the first vertex `t'` lying in some `X ∈ F_out` with `X ⊊ R`;
/// `Q2` runs from `t'` to a safe sink `t` of a minimal `T ∈ F_out` without
/// leaving any member of `F_out`. For case (b) call this on the reversed
/// orientation.
pub fn build_flip_path(d: &Orientation, r_set: &VertexSet, k: usize) -> Result<FlipPath> {
    if r_set.universe() != d.n() {
        return Err(Error::VertexSetMismatch {
            expected: d.n(),
            found: r_set.universe(),
        });
    }
    if k == 0 {
        return Err(Error::InvalidLevel(0));
    }
    require_k_connected(d, k)?;
    require_underlying(d.graph(), 2 * k + 2)?;
    let in_f_in = r_set.is_full() || (!r_set.contains(ROOT) && !r_set.is_empty() && delta(d, Direction::In, r_set) == k);
    if !in_f_in {
        return Err(Error::NotTightSet);
    }
    build_flip_path_unchecked(d, r_set, k)
}
