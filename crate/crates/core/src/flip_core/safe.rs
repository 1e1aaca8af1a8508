use crate::connectivity::{require_k_connected, require_underlying, set_cut, x_tight, Direction};
use crate::error::{Error, Result};
use crate::multigraph::{Orientation, VertexId, VertexSet, ROOT};

/// Safe vertex in a minimal tight set `set`. `cut` is the cut function the
/// safety conditions are stated in: `Out` for a safe source (the set is a
/// minimal member of `F_in`), `In` for a safe sink (minimal in `F_out`).
///
/// Inside `set`, let `Y_1..Y_a` be the maximal subsets with cut value `k`
/// and `Z_1..Z_b` the maximal subsets of `set - ∪Y` with value `k+1`. Any
/// vertex outside all of them is safe; the smallest one is returned.
pub(crate) fn safe_vertex(d: &Orientation, set: &VertexSet, k: usize, cut: Direction) -> Result<VertexId> {
    if set.is_full() {
        return Ok(ROOT);
    }
    let n = d.n();

    let mut in_y = VertexSet::empty(n);
    let outside = set.complement();
    for v in set.iter() {
        if in_y.contains(v) {
            continue;
        }
        match set_cut(d, cut, &VertexSet::singleton(n, v), &outside, k + 1) {
            Some(c) if c.value == k => in_y = in_y.union(&c.max_source_side),
            Some(c) => return Err(Error::NotKConnected { k, lambda: c.value }),
            None => {}
        }
    }

    let rest = set.difference(&in_y);
    let outside_rest = rest.complement();
    let mut in_z = VertexSet::empty(n);
    for v in rest.iter() {
        if in_z.contains(v) {
            continue;
        }
        match set_cut(d, cut, &VertexSet::singleton(n, v), &outside_rest, k + 2) {
            Some(c) if c.value == k + 1 => in_z = in_z.union(&c.max_source_side),
            Some(c) => {
                return Err(Error::invariant(format!(
                    "vertex {v} outside every maximal Y lies in a set of cut value {}",
                    c.value
                )))
            }
            None => {}
        }
    }

    rest.difference(&in_z)
        .first()
        .ok_or_else(|| Error::invariant("no vertex left outside the Y and Z sets"))
}

/// Validates that `set` is an inclusionwise minimal member of the tight
/// family of `family` (`In` for `F_in`, `Out` for `F_out`).
fn check_minimal_tight(d: &Orientation, set: &VertexSet, k: usize, family: Direction) -> Result<()> {
    if set.universe() != d.n() {
        return Err(Error::VertexSetMismatch {
            expected: d.n(),
            found: set.universe(),
        });
    }
    if set.is_empty() {
        return Err(Error::NotMinimalTightSet);
    }
    if set.is_full() {
        // V is minimal only when the family has no proper member.
        for v in 1..d.n() {
            if !x_tight(d, family, VertexId(v), k)?.is_full() {
                return Err(Error::NotMinimalTightSet);
            }
        }
        return Ok(());
    }
    if set.contains(ROOT) {
        return Err(Error::NotMinimalTightSet);
    }
    for v in set.iter() {
        if x_tight(d, family, v, k)? != *set {
            return Err(Error::NotMinimalTightSet);
        }
    }
    Ok(())
}

fn safe_checked(d: &Orientation, set: &VertexSet, k: usize, family: Direction) -> Result<VertexId> {
    if k == 0 {
        return Err(Error::InvalidLevel(k));
    }
    require_k_connected(d, k)?;
    require_underlying(d.graph(), 2 * k + 2)?;
    check_minimal_tight(d, set, k, family)?;
    safe_vertex(d, set, k, family.opposite())
}

/// A safe source in `s_set`, an inclusionwise minimal member of `F_in(D)`.
///
/// Requires `k >= 1`, `λ(D) >= k` and `λ(G) >= 2k + 2`. Returns the root
/// when `s_set = V`.
pub fn safe_source(d: &Orientation, s_set: &VertexSet, k: usize) -> Result<VertexId> {
    safe_checked(d, s_set, k, Direction::In)
}

/// A safe sink in `t_set`, an inclusionwise minimal member of `F_out(D)`.
pub fn safe_sink(d: &Orientation, t_set: &VertexSet, k: usize) -> Result<VertexId> {
    safe_checked(d, t_set, k, Direction::Out)
}
