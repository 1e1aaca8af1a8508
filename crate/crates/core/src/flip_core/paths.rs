use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::connectivity::{require_k_connected, x_tight, Direction};
use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, Orientation, VertexId, VertexSet};

/// A directed walk given by its vertices and the arcs between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiPath {
    pub vertices: Vec<VertexId>,
    /// `edges[i]` joins `vertices[i]` and `vertices[i + 1]`.
    pub edges: Vec<EdgeId>,
}

impl DiPath {
    pub fn trivial(v: VertexId) -> Self {
        Self {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().expect("paths are never empty")
    }

    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The same vertex and edge sequence read backwards.
    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices.reverse();
        edges.reverse();
        Self { vertices, edges }
    }

    /// `self` followed by `other`; `other` must start where `self` ends.
    pub fn concat(&self, other: &DiPath) -> Self {
        assert_eq!(self.end(), other.start(), "paths do not meet");
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Self { vertices, edges }
    }

    /// The subpath up to and including `vertices[idx]`.
    pub fn prefix(&self, idx: usize) -> Self {
        Self {
            vertices: self.vertices[..=idx].to_vec(),
            edges: self.edges[..idx].to_vec(),
        }
    }
}

/// BFS tree of `D[within]` from `start`, scanning arcs in EdgeId order.
/// Returns for each reached vertex its parent arc.
fn bfs_within(
    adjacency: &[Vec<(EdgeId, VertexId)>],
    within: &VertexSet,
    start: VertexId,
) -> Vec<Option<(EdgeId, VertexId)>> {
    let n = adjacency.len();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    seen[start.0] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &(e, w) in &adjacency[u.0] {
            if within.contains(w) && !seen[w.0] {
                seen[w.0] = true;
                parent[w.0] = Some((e, u));
                queue.push_back(w);
            }
        }
    }
    parent
}

fn trace(parent: &[Option<(EdgeId, VertexId)>], start: VertexId, target: VertexId) -> Option<DiPath> {
    let mut vertices = vec![target];
    let mut edges = Vec::new();
    let mut v = target;
    while v != start {
        let (e, u) = parent[v.0]?;
        edges.push(e);
        vertices.push(u);
        v = u;
    }
    vertices.reverse();
    edges.reverse();
    Some(DiPath { vertices, edges })
}

/// Memoized minimal tight sets `X_out(v)` (or `X_in(v)`).
pub(crate) struct TightCache<'a> {
    d: &'a Orientation,
    dir: Direction,
    k: usize,
    memo: HashMap<VertexId, VertexSet>,
}

impl<'a> TightCache<'a> {
    pub(crate) fn new(d: &'a Orientation, dir: Direction, k: usize) -> Self {
        Self {
            d,
            dir,
            k,
            memo: HashMap::new(),
        }
    }

    pub(crate) fn get(&mut self, v: VertexId) -> Result<VertexSet> {
        if let Some(x) = self.memo.get(&v) {
            return Ok(x.clone());
        }
        let x = x_tight(self.d, self.dir, v, self.k)?;
        self.memo.insert(v, x.clone());
        Ok(x)
    }
}

pub(crate) fn path_to_minimal_out_unchecked(
    d: &Orientation,
    s: VertexId,
    k: usize,
) -> Result<(VertexSet, BTreeMap<VertexId, DiPath>)> {
    let adjacency = d.out_adjacency();
    let mut cache = TightCache::new(d, Direction::Out, k);
    let mut prefix = DiPath::trivial(s);
    let mut cur = s;
    // |X_out(cur)| strictly decreases, so at most n rounds.
    for _ in 0..=d.n() {
        let x = cache.get(cur)?;
        let mut smaller = None;
        for u in x.iter() {
            if cache.get(u)?.is_proper_subset(&x) {
                smaller = Some(u);
                break;
            }
        }
        let parent = bfs_within(&adjacency, &x, cur);
        let Some(u) = smaller else {
            let mut paths = BTreeMap::new();
            for t in x.iter() {
                let tail = trace(&parent, cur, t).ok_or_else(|| {
                    Error::invariant(format!("{t} unreachable from {cur} inside its tight out-set"))
                })?;
                paths.insert(t, prefix.concat(&tail));
            }
            return Ok((x, paths));
        };
        let walk = trace(&parent, cur, u).ok_or_else(|| {
            Error::invariant(format!("{u} unreachable from {cur} inside its tight out-set"))
        })?;
        let mut stop = None;
        for (i, &v) in walk.vertices.iter().enumerate().skip(1) {
            if cache.get(v)?.is_proper_subset(&x) {
                stop = Some(i);
                break;
            }
        }
        let stop = stop.expect("the walk ends at a vertex with a smaller tight set");
        prefix = prefix.concat(&walk.prefix(stop));
        cur = walk.vertices[stop];
    }
    Err(Error::invariant("tight out-sets failed to shrink"))
}

fn check_args(d: &Orientation, v: VertexId, k: usize) -> Result<()> {
    if v.0 >= d.n() {
        return Err(Error::VertexOutOfRange { vertex: v.0, n: d.n() });
    }
    if k == 0 {
        return Err(Error::InvalidLevel(0));
    }
    require_k_connected(d, k)
}

/// A minimal `T ∈ F_out(D)` and, for every `t ∈ T`, an `(s, t)`-path that
/// uses no arc leaving any member of `F_out(D)`.
///
/// Requires `k >= 1` and `λ(D) >= k`. BFS scans arcs in EdgeId order, so
/// the result is deterministic.
pub fn path_to_minimal_out(
    d: &Orientation,
    s: VertexId,
    k: usize,
) -> Result<(VertexSet, BTreeMap<VertexId, DiPath>)> {
    check_args(d, s, k)?;
    path_to_minimal_out_unchecked(d, s, k)
}

pub(crate) fn path_from_minimal_in_unchecked(
    d: &Orientation,
    t: VertexId,
    k: usize,
) -> Result<(VertexSet, BTreeMap<VertexId, DiPath>)> {
    let (set, paths) = path_to_minimal_out_unchecked(&d.reversed(), t, k)?;
    Ok((set, paths.into_iter().map(|(v, p)| (v, p.reversed())).collect()))
}

/// Mirror of [`path_to_minimal_out`]: a minimal `S ∈ F_in(D)` and, for
/// every `s ∈ S`, an `(s, t)`-path using no arc entering any member of
/// `F_in(D)`.
pub fn path_from_minimal_in(
    d: &Orientation,
    t: VertexId,
    k: usize,
) -> Result<(VertexSet, BTreeMap<VertexId, DiPath>)> {
    check_args(d, t, k)?;
    path_from_minimal_in_unchecked(d, t, k)
}
