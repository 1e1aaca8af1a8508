//! Cut functions, edge-connectivity, and the tight-set families.
//!
//! For a connectivity level `k` and the fixed root `r` (vertex 0):
//!
//! * `F_out(D)` holds every non-empty `X ⊆ V - r` with `δ+(X) = k`, plus `V`;
//! * `F_in(D)` holds every non-empty `X ⊆ V - r` with `δ-(X) = k`, plus `V`;
//! * `F_min(D)` holds the inclusionwise minimal members of their union;
//! * `val(D) = Σ_{X ∈ F_min} (|V| - |X|)`, which is zero exactly when `D` is
//!   `(k+1)`-edge-connected.
//!
//! Everything is answered with unit-capacity max-flow. The minimal member
//! of `F_out` containing `s` is the residual-reachable side of a minimum
//! `s → r` cut when that cut has value `k`.



use crate::error::{Error, Result};
use crate::flow::{FlowNetwork, INF};
use crate::multigraph::{Orientation, UndirectedMultigraph, VertexId, VertexSet, ROOT};

/// Which cut function a query is about: `δ+` (arcs leaving) or `δ-` (arcs entering).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Out,
    In,
}

impl Direction {
    pub fn opposite(self) -> Self {
        match self {
            Direction::Out => Direction::In,
            Direction::In => Direction::Out,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub value: usize,
    /// Inclusionwise minimal source side of a minimum cut.
    pub min_source_side: VertexSet,
    /// Inclusionwise maximal source side of a minimum cut.
    pub max_source_side: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightFamilies {
    pub k: usize,
    pub root: VertexId,
    pub f_out_min: Vec<VertexSet>,
    pub f_in_min: Vec<VertexSet>,
    pub f_min: Vec<VertexSet>,
    pub val: usize,
}

impl TightFamilies {
    /// Assembles the families from the minimal members of `F_out` and `F_in`.
    pub fn from_minimal(k: usize, n: usize, f_out_min: Vec<VertexSet>, f_in_min: Vec<VertexSet>) -> Self {
        let f_out_min = minimal_sets(f_out_min);
        let f_in_min = minimal_sets(f_in_min);
        let f_min = minimal_sets(f_out_min.iter().chain(&f_in_min).cloned().collect());
        let val = f_min.iter().map(|x| n - x.len()).sum();
        Self {
            k,
            root: ROOT,
            f_out_min,
            f_in_min,
            f_min,
            val,
        }
    }

    /// `true` when `F_min = {V}`, i.e. the orientation is `(k+1)`-edge-connected.
    pub fn is_saturated(&self) -> bool {
        self.val == 0
    }
}

/// Canonical (sorted, deduplicated) list of the inclusionwise minimal sets.
pub fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort();
    sets.dedup();
    let keep: Vec<bool> = sets
        .iter()
        .map(|x| !sets.iter().any(|y| y.is_proper_subset(x)))
        .collect();
    sets.into_iter()
        .zip(keep)
        .filter_map(|(x, k)| k.then_some(x))
        .collect()
}

/// Unit-capacity network of `d`'s arcs (reversed for `Direction::In`), with
/// two spare nodes `n` and `n+1` for set-to-set cuts.
fn arc_network(d: &Orientation, dir: Direction, spare: bool) -> FlowNetwork {
    let n = d.n();
    let mut net = FlowNetwork::with_capacity(n + if spare { 2 } else { 0 }, d.m() + 2 * n);
    for (_, t, h) in d.arcs() {
        match dir {
            Direction::Out => net.add_arc(t.0, h.0, 1),
            Direction::In => net.add_arc(h.0, t.0, 1),
        }
    }
    net
}

/// Minimum of `δ_dir(X)` over `sources ⊆ X ⊆ V - sinks`, with the extreme
/// minimizers. Returns `None` when the minimum is at least `limit`.
pub(crate) fn set_cut(
    d: &Orientation,
    dir: Direction,
    sources: &VertexSet,
    sinks: &VertexSet,
    limit: usize,
) -> Option<CutResult> {
    let n = d.n();
    debug_assert!(!sources.intersects(sinks));
    let mut net = arc_network(d, dir, true);
    let (s, t) = (n, n + 1);
    for v in sources.iter() {
        net.add_arc(s, v.0, INF);
    }
    for v in sinks.iter() {
        net.add_arc(v.0, t, INF);
    }
    let limit32 = limit.min(INF as usize - 1) as u32;
    let value = net.max_flow(s, t, limit32) as usize;
    if value >= limit {
        return None;
    }
    let from = net.residual_from(s);
    let to = net.residual_to(t);
    Some(CutResult {
        value,
        min_source_side: VertexSet::from_vertices(n, (0..n).filter(|&v| from[v])),
        max_source_side: VertexSet::from_vertices(n, (0..n).filter(|&v| !to[v])),
    })
}

fn check_vertex(d: &Orientation, v: VertexId) -> Result<()> {
    if v.0 >= d.n() {
        return Err(Error::VertexOutOfRange { vertex: v.0, n: d.n() });
    }
    Ok(())
}

/// Maximum number of arc-disjoint `s → t` paths with the extreme minimum cuts.
pub fn max_flow(d: &Orientation, s: VertexId, t: VertexId) -> Result<CutResult> {
    check_vertex(d, s)?;
    check_vertex(d, t)?;
    if s == t {
        return Err(Error::SameVertex);
    }
    let n = d.n();
    let cut = set_cut(
        d,
        Direction::Out,
        &VertexSet::singleton(n, s),
        &VertexSet::singleton(n, t),
        usize::MAX,
    )
    .expect("unbounded flow query always yields a cut");
    Ok(cut)
}

pub fn delta_plus(d: &Orientation, x: &VertexSet) -> usize {
    d.out_degree_of_set(x)
}

pub fn delta_minus(d: &Orientation, x: &VertexSet) -> usize {
    d.in_degree_of_set(x)
}

pub fn delta(d: &Orientation, dir: Direction, x: &VertexSet) -> usize {
    match dir {
        Direction::Out => delta_plus(d, x),
        Direction::In => delta_minus(d, x),
    }
}

/// `min_v min(flow(r,v), flow(v,r))`, stopping early at `cap`.
fn lambda_capped(d: &Orientation, cap: usize) -> usize {
    let n = d.n();
    let mut best = cap;
    let mut net = arc_network(d, Direction::Out, false);
    let base = net.snapshot();
    for v in 1..n {
        for (s, t) in [(0, v), (v, 0)] {
            if best == 0 {
                return 0;
            }
            net.restore(&base);
            let f = net.max_flow(s, t, best as u32) as usize;
            best = best.min(f);
        }
    }
    best
}

/// Directed edge-connectivity `λ(D)`.
pub fn lambda_directed(d: &Orientation) -> Result<usize> {
    if d.n() < 2 {
        return Err(Error::TooSmall);
    }
    Ok(lambda_capped(d, d.m()))
}

/// Undirected edge-connectivity `λ(G)`.
pub fn lambda_undirected(g: &UndirectedMultigraph) -> Result<usize> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall);
    }
    let mut net = FlowNetwork::with_capacity(n, 2 * g.m());
    for &(u, v) in g.edges() {
        net.add_arc(u, v, 1);
        net.add_arc(v, u, 1);
    }
    let base = net.snapshot();
    let mut best = g.m();
    for v in 1..n {
        if best == 0 {
            break;
        }
        net.restore(&base);
        best = best.min(net.max_flow(0, v, best as u32) as usize);
    }
    Ok(best)
}

/// `λ(D) >= k`. Always true for `k = 0` or fewer than two vertices.
pub fn is_k_edge_connected(d: &Orientation, k: usize) -> bool {
    if k == 0 || d.n() < 2 {
        return true;
    }
    if k == 1 {
        return d.is_strongly_connected();
    }
    lambda_capped(d, k) >= k
}

pub(crate) fn require_k_connected(d: &Orientation, k: usize) -> Result<()> {
    if is_k_edge_connected(d, k) {
        Ok(())
    } else {
        Err(Error::NotKConnected {
            k,
            lambda: lambda_directed(d).unwrap_or(0),
        })
    }
}

pub(crate) fn require_underlying(g: &UndirectedMultigraph, required: usize) -> Result<()> {
    if required == 0 {
        return Ok(());
    }
    let actual = lambda_undirected(g)?;
    if actual < required {
        return Err(Error::UnderlyingConnectivityTooLow { required, actual });
    }
    Ok(())
}

/// Minimal tight set of `dir` containing `s`, without checking preconditions
/// beyond what the flow reveals.
pub(crate) fn x_tight(d: &Orientation, dir: Direction, s: VertexId, k: usize) -> Result<VertexSet> {
    let n = d.n();
    if s == ROOT {
        return Ok(VertexSet::full(n));
    }
    match set_cut(
        d,
        dir,
        &VertexSet::singleton(n, s),
        &VertexSet::singleton(n, ROOT),
        k + 1,
    ) {
        None => Ok(VertexSet::full(n)),
        Some(c) if c.value == k => Ok(c.min_source_side),
        Some(c) => Err(Error::NotKConnected { k, lambda: c.value }),
    }
}

/// Inclusionwise minimal `X ∈ F_out(D)` with `s ∈ X`; `V` when no proper
/// tight out-set contains `s`.
pub fn x_out(d: &Orientation, s: VertexId, k: usize) -> Result<VertexSet> {
    check_vertex(d, s)?;
    require_k_connected(d, k)?;
    x_tight(d, Direction::Out, s, k)
}

/// Mirror of [`x_out`] for `F_in(D)`.
pub fn x_in(d: &Orientation, s: VertexId, k: usize) -> Result<VertexSet> {
    check_vertex(d, s)?;
    require_k_connected(d, k)?;
    x_tight(d, Direction::In, s, k)
}

/// Minimal members of the tight family of `dir`.
pub(crate) fn minimal_tight(d: &Orientation, dir: Direction, k: usize) -> Result<Vec<VertexSet>> {
    let n = d.n();
    let mut found = Vec::new();
    for s in 1..n {
        let x = x_tight(d, dir, VertexId(s), k)?;
        if !x.is_full() {
            found.push(x);
        }
    }
    if found.is_empty() {
        found.push(VertexSet::full(n));
    }
    Ok(minimal_sets(found))
}

pub(crate) fn tight_families_unchecked(d: &Orientation, k: usize) -> Result<TightFamilies> {
    let out = minimal_tight(d, Direction::Out, k)?;
    let inn = minimal_tight(d, Direction::In, k)?;
    Ok(TightFamilies::from_minimal(k, d.n(), out, inn))
}

/// Minimal members of `F_out`, `F_in`, `F_min`, and `val(D)`.
///
/// Requires `λ(D) >= k` and `λ(G) >= 2k + 2`; without the latter the two
/// families may share proper members and the potential loses its meaning,
/// so the call fails instead.
pub fn tight_families(d: &Orientation, k: usize) -> Result<TightFamilies> {
    if d.n() < 2 {
        return Err(Error::TooSmall);
    }
    require_underlying(d.graph(), 2 * k + 2)?;
    tight_families_unchecked(d, k)
}
