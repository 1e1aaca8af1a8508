//! Undirected multigraphs, their orientations, and the single edge flip.
//!
//! Edges are identified by their position in the input edge list, so an
//! [`EdgeId`] stays meaningful across every orientation of the same graph.
//! An [`Orientation`] stores one direction bit per edge: `false` means the
//! arc runs in the stored `(u, v)` order, `true` means it runs `(v, u)`.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The fixed root vertex used by every root-dependent construction.
pub const ROOT: VertexId = VertexId(0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Undirected multigraph on vertices `0..n` without self-loops.
#[derive(Clone)]
pub struct UndirectedMultigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<Vec<EdgeId>>,
}

impl UndirectedMultigraph {
    /// Builds a graph; EdgeIds follow the order of `edge_list`.
    pub fn build(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut incidence = vec![Vec::new(); n];
        for (i, &(u, v)) in edge_list.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(VertexId(u)));
            }
            incidence[u].push(EdgeId(i));
            incidence[v].push(EdgeId(i));
        }
        Ok(Self {
            n,
            edges: edge_list.to_vec(),
            incidence,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Stored endpoints of `e`, in input order.
    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let (u, v) = self.edges[e.0];
        (VertexId(u), VertexId(v))
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edges incident to `v`, ascending by EdgeId.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v.0]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v.0].len()
    }

    /// Number of edges with exactly one endpoint in `x`.
    pub fn cut_size(&self, x: &VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| x.contains(VertexId(u)) != x.contains(VertexId(v)))
            .count()
    }

    /// Every edge replaced by `factor` parallel copies; copies of edge `i`
    /// get ids `i*factor .. (i+1)*factor`.
    pub fn duplicated(&self, factor: usize) -> Self {
        let edges: Vec<_> = self
            .edges
            .iter()
            .flat_map(|&e| std::iter::repeat(e).take(factor))
            .collect();
        Self::build(self.n, &edges).expect("duplicating a valid graph")
    }

    /// Whether the graph is connected (a single vertex counts as connected).
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &e in &self.incidence[u] {
                let (a, b) = self.edges[e.0];
                let w = if a == u { b } else { a };
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }
}

impl PartialEq for UndirectedMultigraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for UndirectedMultigraph {}

impl fmt::Debug for UndirectedMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UndirectedMultigraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Subset of `0..n` backed by a packed bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.words[v / 64] |= 1 << (v % 64);
        }
        s
    }

    pub fn singleton(n: usize, v: VertexId) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vs: I) -> Self {
        let mut s = Self::empty(n);
        for v in vs {
            s.insert(VertexId(v));
        }
        s
    }

    /// Set from the low `n` bits of `mask` (vertex `i` is bit `i`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64, "from_mask supports at most 64 vertices");
        let mut s = Self::empty(n);
        if n > 0 {
            let keep = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    /// Inverse of [`VertexSet::from_mask`]; only valid for `n <= 64`.
    pub fn to_mask(&self) -> u64 {
        assert!(self.n <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        v.0 < self.n && self.words[v.0 / 64] >> (v.0 % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        assert!(v.0 < self.n, "vertex {} outside universe {}", v.0, self.n);
        self.words[v.0 / 64] |= 1 << (v.0 % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        if v.0 < self.n {
            self.words[v.0 / 64] &= !(1 << (v.0 % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(VertexId(i * 64 + b))
            })
        })
    }

    /// Smallest member.
    pub fn first(&self) -> Option<VertexId> {
        self.iter().next()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
        Self {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.n).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.n == other.n && self.words.iter().zip(&other.words).all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_proper_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(&a, &b)| a & b != 0)
    }
}

/// Lexicographic order on the ascending member sequences.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

/// An orientation of an undirected multigraph.
#[derive(Clone)]
pub struct Orientation {
    graph: Arc<UndirectedMultigraph>,
    reversed: Vec<bool>,
}

impl Orientation {
    /// Every edge directed as stored.
    pub fn forward(graph: Arc<UndirectedMultigraph>) -> Self {
        let m = graph.m();
        Self {
            graph,
            reversed: vec![false; m],
        }
    }

    pub fn from_bits(graph: Arc<UndirectedMultigraph>, reversed: Vec<bool>) -> Result<Self> {
        if reversed.len() != graph.m() {
            return Err(Error::EdgeOutOfRange {
                edge: reversed.len(),
                m: graph.m(),
            });
        }
        Ok(Self { graph, reversed })
    }

    /// Orientation from its integer code (see [`Orientation::code`]).
    pub fn from_code(graph: Arc<UndirectedMultigraph>, code: u64) -> Self {
        let m = graph.m();
        assert!(m <= 64, "integer codes need m <= 64");
        let reversed = (0..m).map(|i| code >> (m - 1 - i) & 1 == 1).collect();
        Self { graph, reversed }
    }

    /// Direction bits read as a binary number, edge 0 most significant, so
    /// numeric order coincides with lexicographic order of [`Self::bitstring`].
    pub fn code(&self) -> u64 {
        assert!(self.m() <= 64, "integer codes need m <= 64");
        self.reversed
            .iter()
            .fold(0u64, |acc, &b| (acc << 1) | u64::from(b))
    }

    /// One `0`/`1` character per edge, `0` meaning forward.
    pub fn bitstring(&self) -> String {
        self.reversed
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }

    pub fn graph(&self) -> &UndirectedMultigraph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<UndirectedMultigraph> {
        &self.graph
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.graph.m()
    }

    #[inline]
    pub fn is_reversed(&self, e: EdgeId) -> bool {
        self.reversed[e.0]
    }

    pub fn bits(&self) -> &[bool] {
        &self.reversed
    }

    /// `(tail, head)` of the arc of `e`.
    #[inline]
    pub fn arc(&self, e: EdgeId) -> (VertexId, VertexId) {
        let (u, v) = self.graph.endpoints(e);
        if self.reversed[e.0] {
            (v, u)
        } else {
            (u, v)
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.graph.edge_ids().map(|e| {
            let (t, h) = self.arc(e);
            (e, t, h)
        })
    }

    fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e.0 >= self.m() {
            return Err(Error::EdgeOutOfRange {
                edge: e.0,
                m: self.m(),
            });
        }
        Ok(())
    }

    /// Returns the orientation with the arc of `e` reversed.
    pub fn flip(&self, e: EdgeId) -> Result<Self> {
        let mut out = self.clone();
        out.flip_in_place(e)?;
        Ok(out)
    }

    pub fn flip_in_place(&mut self, e: EdgeId) -> Result<()> {
        self.check_edge(e)?;
        self.reversed[e.0] = !self.reversed[e.0];
        Ok(())
    }

    /// All arcs reversed.
    pub fn reversed(&self) -> Self {
        Self {
            graph: Arc::clone(&self.graph),
            reversed: self.reversed.iter().map(|b| !b).collect(),
        }
    }

    pub fn same_graph(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.graph, &other.graph) || *self.graph == *other.graph
    }

    /// Edges whose direction differs between the two orientations.
    pub fn diff(&self, other: &Self) -> Result<Vec<EdgeId>> {
        if !self.same_graph(other) {
            return Err(Error::GraphMismatch);
        }
        Ok(self
            .reversed
            .iter()
            .zip(&other.reversed)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(i, _)| EdgeId(i))
            .collect())
    }

    /// Number of arcs leaving `x`.
    pub fn out_degree_of_set(&self, x: &VertexSet) -> usize {
        self.arcs()
            .filter(|&(_, t, h)| x.contains(t) && !x.contains(h))
            .count()
    }

    /// Number of arcs entering `x`.
    pub fn in_degree_of_set(&self, x: &VertexSet) -> usize {
        self.arcs()
            .filter(|&(_, t, h)| !x.contains(t) && x.contains(h))
            .count()
    }

    /// Out-adjacency lists `(edge, head)`, ascending by EdgeId.
    pub fn out_adjacency(&self) -> Vec<Vec<(EdgeId, VertexId)>> {
        let mut adj = vec![Vec::new(); self.n()];
        for (e, t, h) in self.arcs() {
            adj[t.0].push((e, h));
        }
        adj
    }

    /// Vertices reachable from `start` along arcs.
    pub fn reachable_from(&self, start: VertexId) -> VertexSet {
        reach(self, start, false)
    }

    /// Vertices that can reach `target` along arcs.
    pub fn reaching(&self, target: VertexId) -> VertexSet {
        reach(self, target, true)
    }

    pub fn is_strongly_connected(&self) -> bool {
        let n = self.n();
        n <= 1 || (self.reachable_from(ROOT).is_full() && self.reaching(ROOT).is_full())
    }
}

fn reach(d: &Orientation, start: VertexId, backwards: bool) -> VertexSet {
    let g = d.graph();
    let mut seen = VertexSet::empty(d.n());
    seen.insert(start);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &e in g.incident(u) {
            let (t, h) = d.arc(e);
            let next = if backwards { (h == u).then_some(t) } else { (t == u).then_some(h) };
            if let Some(w) = next {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
    }
    seen
}

impl PartialEq for Orientation {
    fn eq(&self, other: &Self) -> bool {
        self.same_graph(other) && self.reversed == other.reversed
    }
}

impl Eq for Orientation {}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Orientation({})", self.bitstring())
    }
}

/// Arc set of a strongly connected spanning subgraph: the union of a BFS
/// out-tree and a BFS in-tree rooted at `root`. Sorted by EdgeId.
pub fn strong_skeleton(d: &Orientation, root: VertexId) -> Result<Vec<EdgeId>> {
    if root.0 >= d.n() {
        return Err(Error::VertexOutOfRange {
            vertex: root.0,
            n: d.n(),
        });
    }
    if !d.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let mut used = vec![false; d.m()];
    for backwards in [false, true] {
        let mut seen = vec![false; d.n()];
        seen[root.0] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &e in d.graph().incident(u) {
                let (t, h) = d.arc(e);
                let (from, to) = if backwards { (h, t) } else { (t, h) };
                if from == u && !seen[to.0] {
                    seen[to.0] = true;
                    used[e.0] = true;
                    queue.push_back(to);
                }
            }
        }
    }
    Ok(used
        .iter()
        .enumerate()
        .filter(|(_, &u)| u)
        .map(|(i, _)| EdgeId(i))
        .collect())
}

/// A strongly connected orientation of a 2-edge-connected graph, built from
/// a depth-first search: tree edges point away from the root and every other
/// edge points back toward the earlier-discovered endpoint.
pub fn strong_orientation(graph: &Arc<UndirectedMultigraph>) -> Result<Orientation> {
    let g = graph.as_ref();
    let n = g.n();
    let mut reversed = vec![false; g.m()];
    let mut assigned = vec![false; g.m()];
    let mut disc = vec![usize::MAX; n];
    let mut clock = 0;
    if n > 0 {
        disc[0] = clock;
        clock += 1;
        // (vertex, next incidence index)
        let mut stack = vec![(0usize, 0usize)];
        while let Some(&mut (u, ref mut pos)) = stack.last_mut() {
            let inc = g.incident(VertexId(u));
            if *pos == inc.len() {
                stack.pop();
                continue;
            }
            let e = inc[*pos];
            *pos += 1;
            if assigned[e.0] {
                continue;
            }
            assigned[e.0] = true;
            let (a, b) = g.endpoints(e);
            let w = if a.0 == u { b.0 } else { a.0 };
            let (tail, head) = if disc[w] == usize::MAX {
                disc[w] = clock;
                clock += 1;
                stack.push((w, 0));
                (u, w)
            } else if disc[w] < disc[u] {
                (u, w)
            } else {
                (w, u)
            };
            reversed[e.0] = a.0 != tail || b.0 != head;
        }
    }
    let d = Orientation::from_bits(Arc::clone(graph), reversed)?;
    if d.is_strongly_connected() {
        Ok(d)
    } else {
        Err(Error::UnderlyingConnectivityTooLow {
            required: 2,
            actual: crate::connectivity::lambda_undirected(g).unwrap_or(0),
        })
    }
}
