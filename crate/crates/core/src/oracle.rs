//! Brute-force ground truth for small instances.
//!
//! Everything here follows definitions literally: orientations are
//! enumerated as bit vectors, cut functions are evaluated on every vertex
//! subset. Orientations are identified by their integer code (edge 0 is
//! the most significant bit), so numeric order is lexicographic bit order.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::connectivity::{is_k_edge_connected, lambda_undirected, TightFamilies};
use crate::error::{Error, Result};
use crate::flip_core::{RCase, SafeKind};
use crate::multigraph::{EdgeId, Orientation, UndirectedMultigraph, VertexId, VertexSet, ROOT};

/// Size limits for exhaustive work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    /// Largest `m` for orientation enumeration (`2^m` candidates).
    pub max_edges: usize,
    /// Largest `n` for subset enumeration (`2^n` subsets).
    pub max_vertices: usize,
    /// Most orientations an implicit search may visit.
    pub node_cap: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        Self {
            max_edges: 24,
            max_vertices: 14,
            node_cap: 2_000_000,
        }
    }
}

fn check_edges(g: &UndirectedMultigraph, caps: &OracleCaps) -> Result<()> {
    if g.m() > caps.max_edges.min(63) {
        return Err(Error::TooLarge {
            what: "edge count",
            size: g.m(),
            cap: caps.max_edges.min(63),
        });
    }
    Ok(())
}

fn check_vertices(n: usize, caps: &OracleCaps) -> Result<()> {
    if n > caps.max_vertices.min(30) {
        return Err(Error::TooLarge {
            what: "vertex count",
            size: n,
            cap: caps.max_vertices.min(30),
        });
    }
    Ok(())
}

/// All orientations with `λ >= k`, in lexicographic bit order.
pub fn enumerate_orientations(
    g: &Arc<UndirectedMultigraph>,
    k: usize,
    caps: &OracleCaps,
) -> Result<Vec<Orientation>> {
    check_edges(g, caps)?;
    Ok((0..1u64 << g.m())
        .map(|code| Orientation::from_code(g.clone(), code))
        .filter(|d| is_k_edge_connected(d, k))
        .collect())
}

/// The flip graph `G_k(G)`: all `k`-edge-connected orientations, adjacent
/// when they differ in exactly one edge.
#[derive(Debug, Clone)]
pub struct FlipGraph {
    pub k: usize,
    graph: Arc<UndirectedMultigraph>,
    codes: Vec<u64>,
    index: HashMap<u64, usize>,
    adjacency: Vec<Vec<(usize, EdgeId)>>,
}

/// Builds `G_k(G)` by enumerating all orientations; fails with
/// [`Error::TooLarge`] when it would have more than
/// `caps.node_cap` nodes.
pub fn build_flip_graph(g: &Arc<UndirectedMultigraph>, k: usize, caps: &OracleCaps) -> Result<FlipGraph> {
    let nodes = enumerate_orientations(g, k, caps)?;
    if nodes.len() > caps.node_cap {
        return Err(Error::TooLarge {
            what: "flip graph",
            size: nodes.len(),
            cap: caps.node_cap,
        });
    }
    let codes: Vec<u64> = nodes.iter().map(Orientation::code).collect();
    let index: HashMap<u64, usize> = codes.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let m = g.m();
    let adjacency = codes
        .iter()
        .map(|&c| {
            (0..m)
                .filter_map(|e| {
                    let bit = 1u64 << (m - 1 - e);
                    index.get(&(c ^ bit)).map(|&j| (j, EdgeId(e)))
                })
                .collect()
        })
        .collect();
    Ok(FlipGraph {
        k,
        graph: g.clone(),
        codes,
        index,
        adjacency,
    })
}

impl FlipGraph {
    pub fn node_count(&self) -> usize {
        self.codes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn orientation(&self, i: usize) -> Orientation {
        Orientation::from_code(self.graph.clone(), self.codes[i])
    }

    pub fn nodes(&self) -> impl Iterator<Item = Orientation> + '_ {
        (0..self.node_count()).map(|i| self.orientation(i))
    }

    pub fn codes(&self) -> &[u64] {
        &self.codes
    }

    /// Neighbours of node `i` with the edge whose flip leads there.
    pub fn neighbors(&self, i: usize) -> &[(usize, EdgeId)] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn index_of(&self, d: &Orientation) -> Result<usize> {
        if d.graph() != &*self.graph {
            return Err(Error::GraphMismatch);
        }
        self.index.get(&d.code()).copied().ok_or(Error::NodeNotFound)
    }

    fn bfs(&self, from: usize) -> Vec<Option<(usize, usize, EdgeId)>> {
        // (distance, parent, edge) per node
        let mut info = vec![None; self.node_count()];
        info[from] = Some((0, from, EdgeId(usize::MAX)));
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            let du = info[u].expect("queued nodes are labelled").0;
            for &(w, e) in &self.adjacency[u] {
                if info[w].is_none() {
                    info[w] = Some((du + 1, u, e));
                    queue.push_back(w);
                }
            }
        }
        info
    }

    /// Flip distance, or `None` when the two lie in different components.
    pub fn bfs_distance(&self, d1: &Orientation, d2: &Orientation) -> Result<Option<usize>> {
        let (a, b) = (self.index_of(d1)?, self.index_of(d2)?);
        Ok(self.bfs(a)[b].map(|(dist, _, _)| dist))
    }

    /// Edges of one shortest flip sequence from `d1` to `d2`.
    pub fn shortest_path(&self, d1: &Orientation, d2: &Orientation) -> Result<Option<Vec<EdgeId>>> {
        let (a, b) = (self.index_of(d1)?, self.index_of(d2)?);
        let info = self.bfs(a);
        if info[b].is_none() {
            return Ok(None);
        }
        let mut edges = Vec::new();
        let mut v = b;
        while v != a {
            let (_, p, e) = info[v].expect("on a BFS path");
            edges.push(e);
            v = p;
        }
        edges.reverse();
        Ok(Some(edges))
    }

    /// Component id for every node, ids numbered in order of first node.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.node_count()];
        let mut next = 0;
        for s in 0..self.node_count() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(w, _) in &self.adjacency[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |&c| c + 1)
    }

    /// Connected with at least one node.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Largest flip distance; `None` when disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        if !self.is_connected() {
            return None;
        }
        (0..self.node_count())
            .map(|s| {
                self.bfs(s)
                    .iter()
                    .map(|x| x.expect("connected").0)
                    .max()
                    .unwrap_or(0)
            })
            .max()
    }

    /// Graphviz rendering, nodes labelled by their direction bits.
    pub fn to_dot(&self) -> String {
        let m = self.graph.m();
        let mut out = format!("graph flip_graph_k{} {{\n", self.k);
        for (i, &c) in self.codes.iter().enumerate() {
            let bits: String = (0..m)
                .map(|e| if c >> (m - 1 - e) & 1 == 1 { '1' } else { '0' })
                .collect();
            writeln!(out, "  n{i} [label=\"{bits}\"];").unwrap();
        }
        for (i, adj) in self.adjacency.iter().enumerate() {
            for &(j, e) in adj {
                if i < j {
                    writeln!(out, "  n{i} -- n{j} [label=\"{e}\"];").unwrap();
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// One side of the bidirectional search: discovered codes with their
/// distance and the (neighbour, edge) they were reached through.
struct Side {
    seen: HashMap<u64, (usize, u64, EdgeId)>,
    frontier: Vec<u64>,
    depth: usize,
}

impl Side {
    fn new(root: u64) -> Self {
        Self {
            seen: HashMap::from([(root, (0, root, EdgeId(usize::MAX)))]),
            frontier: vec![root],
            depth: 0,
        }
    }

    /// Edges from the root of this side to `code`, root end first.
    fn trace(&self, mut code: u64) -> Vec<EdgeId> {
        let mut edges = Vec::new();
        loop {
            let (d, prev, e) = self.seen[&code];
            if d == 0 {
                break;
            }
            edges.push(e);
            code = prev;
        }
        edges.reverse();
        edges
    }
}

/// Shortest flip sequence between two `k`-edge-connected orientations,
/// found by a bidirectional breadth-first search over `k`-edge-connected
/// orientations without building the whole flip graph. Fails with
/// [`Error::TooLarge`] once more than `node_cap` orientations have been
/// discovered.
pub fn shortest_flip_path(
    d1: &Orientation,
    d2: &Orientation,
    k: usize,
    node_cap: usize,
) -> Result<Option<Vec<EdgeId>>> {
    if !d1.same_graph(d2) {
        return Err(Error::GraphMismatch);
    }
    let m = d1.m();
    if m > 63 {
        return Err(Error::TooLarge {
            what: "edge count",
            size: m,
            cap: 63,
        });
    }
    for d in [d1, d2] {
        if !is_k_edge_connected(d, k) {
            return Err(Error::NodeNotFound);
        }
    }
    let (start, goal) = (d1.code(), d2.code());
    if start == goal {
        return Ok(Some(Vec::new()));
    }
    let graph = d1.graph_arc().clone();
    let mut sides = [Side::new(start), Side::new(goal)];
    while !sides[0].frontier.is_empty() && !sides[1].frontier.is_empty() {
        // expand one full level of the smaller frontier
        let i = usize::from(sides[1].frontier.len() < sides[0].frontier.len());
        let [a, b] = &mut sides;
        let (this, other) = if i == 0 { (a, b) } else { (b, a) };
        let mut best: Option<(usize, u64)> = None;
        let mut next_frontier = Vec::new();
        for &c in &this.frontier {
            for e in 0..m {
                let next = c ^ (1u64 << (m - 1 - e));
                if this.seen.contains_key(&next) {
                    continue;
                }
                if !is_k_edge_connected(&Orientation::from_code(graph.clone(), next), k) {
                    continue;
                }
                let discovered = this.seen.len() + other.seen.len();
                if discovered >= node_cap {
                    return Err(Error::TooLarge {
                        what: "flip-graph search",
                        size: discovered + 1,
                        cap: node_cap,
                    });
                }
                this.seen.insert(next, (this.depth + 1, c, EdgeId(e)));
                next_frontier.push(next);
                if let Some(&(d, _, _)) = other.seen.get(&next) {
                    if best.map_or(true, |(bd, _)| d < bd) {
                        best = Some((d, next));
                    }
                }
            }
        }
        this.frontier = next_frontier;
        this.depth += 1;
        if let Some((_, meet)) = best {
            let mut path = sides[0].trace(meet);
            let mut back = sides[1].trace(meet);
            back.reverse();
            path.extend(back);
            return Ok(Some(path));
        }
    }
    Ok(None)
}

/// `δ+` and `δ-` of every vertex subset, indexed by bit mask.
struct SubsetCuts {
    out: Vec<u32>,
    inn: Vec<u32>,
}

impl SubsetCuts {
    fn new(d: &Orientation, caps: &OracleCaps) -> Result<Self> {
        let n = d.n();
        check_vertices(n, caps)?;
        let size = 1usize << n;
        let mut out = vec![0u32; size];
        let mut inn = vec![0u32; size];
        let arcs: Vec<(usize, usize)> = d.arcs().map(|(_, t, h)| (t.0, h.0)).collect();
        for mask in 0..size {
            for &(t, h) in &arcs {
                let (ti, hi) = (mask >> t & 1 == 1, mask >> h & 1 == 1);
                if ti && !hi {
                    out[mask] += 1;
                } else if hi && !ti {
                    inn[mask] += 1;
                }
            }
        }
        Ok(Self { out, inn })
    }

    fn get(&self, kind: SafeKind, mask: usize) -> usize {
        match kind {
            SafeKind::Source => self.out[mask] as usize,
            SafeKind::Sink => self.inn[mask] as usize,
        }
    }
}

/// `λ(D)` as the minimum of `δ+` over proper non-empty subsets.
pub fn brute_lambda(d: &Orientation, caps: &OracleCaps) -> Result<usize> {
    if d.n() < 2 {
        return Err(Error::TooSmall);
    }
    let cuts = SubsetCuts::new(d, caps)?;
    let full = (1usize << d.n()) - 1;
    Ok((1..full).map(|m| cuts.out[m] as usize).min().expect("n >= 2"))
}

fn mask_set(n: usize, mask: usize) -> VertexSet {
    VertexSet::from_mask(n, mask as u64)
}

/// `is_member[mask]` for `F_out` (`Source`) or `F_in` (`Sink`) restricted
/// to proper subsets avoiding the root.
fn tight_masks(cuts: &SubsetCuts, n: usize, k: usize, kind: SafeKind) -> Vec<bool> {
    let root = 1usize << ROOT.0;
    (0..1usize << n)
        .map(|m| m != 0 && m & root == 0 && cuts.get(kind, m) == k)
        .collect()
}

/// `F_out`, `F_in`, `F_min` and `val` by testing every subset.
pub fn check_families(d: &Orientation, k: usize, caps: &OracleCaps) -> Result<TightFamilies> {
    let n = d.n();
    if n < 2 {
        return Err(Error::TooSmall);
    }
    let cuts = SubsetCuts::new(d, caps)?;
    let collect = |kind| {
        let mut sets: Vec<VertexSet> = tight_masks(&cuts, n, k, kind)
            .iter()
            .enumerate()
            .filter(|(_, &t)| t)
            .map(|(m, _)| mask_set(n, m))
            .collect();
        sets.push(VertexSet::full(n));
        sets
    };
    Ok(TightFamilies::from_minimal(
        k,
        n,
        collect(SafeKind::Source),
        collect(SafeKind::Sink),
    ))
}

/// `sub[mask]` is true when some submask of `mask` is marked.
fn any_submask(marked: &[bool], n: usize) -> Vec<bool> {
    let mut sub = marked.to_vec();
    for bit in 0..n {
        for mask in 0..sub.len() {
            if mask >> bit & 1 == 1 && sub[mask ^ (1 << bit)] {
                sub[mask] = true;
            }
        }
    }
    sub
}

/// The definition of a safe source (`Source`) or safe sink (`Sink`) in `S`,
/// checked over every `X ⊆ V - r` with `s ∈ X` and `S - X ≠ ∅`:
/// the cut of `X` is at least `k + 1`, and if it equals `k + 1` then some
/// member of `F_out` (resp. `F_in`) lies inside `X - s`.
pub fn check_safety(
    d: &Orientation,
    s_set: &VertexSet,
    s: VertexId,
    k: usize,
    kind: SafeKind,
    caps: &OracleCaps,
) -> Result<bool> {
    let n = d.n();
    if !s_set.contains(s) {
        return Ok(false);
    }
    let cuts = SubsetCuts::new(d, caps)?;
    let tight = tight_masks(&cuts, n, k, kind);
    let has_tight = any_submask(&tight, n);
    let s_mask = s_set.to_mask() as usize;
    let (root, sb) = (1usize << ROOT.0, 1usize << s.0);
    for x in 0..1usize << n {
        if x & root != 0 || x & sb == 0 || s_mask & !x == 0 {
            continue;
        }
        let c = cuts.get(kind, x);
        if c < k + 1 || (c == k + 1 && !has_tight[x & !sb]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All inclusionwise minimal sets satisfying case (a) or (b), each with the
/// case it satisfies (a set satisfying both is listed once per case).
pub fn check_r_sets(d: &Orientation, k: usize, caps: &OracleCaps) -> Result<Vec<(VertexSet, RCase)>> {
    let n = d.n();
    let cuts = SubsetCuts::new(d, caps)?;
    let full = (1usize << n) - 1;
    let mut out_tight = tight_masks(&cuts, n, k, SafeKind::Source);
    let mut in_tight = tight_masks(&cuts, n, k, SafeKind::Sink);
    out_tight[full] = true;
    in_tight[full] = true;
    let out_sub = any_submask(&out_tight, n);
    let in_sub = any_submask(&in_tight, n);
    // some member strictly inside `r`
    let proper = |sub: &[bool], r: usize| (0..n).any(|v| r >> v & 1 == 1 && sub[r & !(1 << v)]);
    let qualifies = |r: usize| -> Vec<RCase> {
        let mut cases = Vec::new();
        if in_tight[r] && proper(&out_sub, r) {
            cases.push(RCase::A);
        }
        if out_tight[r] && proper(&in_sub, r) {
            cases.push(RCase::B);
        }
        cases
    };
    let good: Vec<bool> = (0..=full).map(|r| !qualifies(r).is_empty()).collect();
    let good_sub = any_submask(&good, n);
    let mut result = Vec::new();
    for r in 1..=full {
        if !good[r] || proper(&good_sub, r) {
            continue;
        }
        for case in qualifies(r) {
            result.push((mask_set(n, r), case));
        }
    }
    result.sort();
    Ok(result)
}

/// Edges lying in some cut of exactly `size` edges.
pub fn edges_in_cuts_of_size(g: &UndirectedMultigraph, size: usize, caps: &OracleCaps) -> Result<Vec<bool>> {
    let n = g.n();
    check_vertices(n, caps)?;
    let mut hit = vec![false; g.m()];
    let root = 1usize << ROOT.0;
    for mask in 1..(1usize << n) {
        if mask & root != 0 {
            continue;
        }
        let crossing: Vec<usize> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| (mask >> u & 1) != (mask >> v & 1))
            .map(|(i, _)| i)
            .collect();
        if crossing.len() == size {
            for i in crossing {
                hit[i] = true;
            }
        }
    }
    Ok(hit)
}

/// Two 2-edge-connected orientations of a 4-edge-connected graph that are
/// not joined in `G_2`, although they agree on every edge of every
/// 4-edge-cut: `d1` has no flip that keeps edge-connectivity two.
#[derive(Debug, Clone)]
pub struct K2Counterexample {
    pub graph: Arc<UndirectedMultigraph>,
    pub d1: Orientation,
    pub d2: Orientation,
}

/// Searches the given graphs for a [`K2Counterexample`]. Graphs that are
/// not exactly 4-edge-connected are skipped.
pub fn hunt_k2_counterexample<I>(graphs: I, caps: &OracleCaps) -> Result<Option<K2Counterexample>>
where
    I: IntoIterator<Item = Arc<UndirectedMultigraph>>,
{
    for g in graphs {
        if g.n() < 2 || g.m() > caps.max_edges || lambda_undirected(&g)? != 4 {
            continue;
        }
        let in_cut = edges_in_cuts_of_size(&g, 4, caps)?;
        if in_cut.iter().all(|&b| b) {
            continue;
        }
        let fg = build_flip_graph(&g, 2, caps)?;
        let mask_free: u64 = (0..g.m())
            .filter(|&e| !in_cut[e])
            .map(|e| 1u64 << (g.m() - 1 - e))
            .sum();
        for i in (0..fg.node_count()).filter(|&i| fg.degree(i) == 0) {
            let c1 = fg.codes[i];
            let partner = fg
                .codes
                .iter()
                .find(|&&c2| c2 != c1 && (c1 ^ c2) & !mask_free == 0);
            if let Some(&c2) = partner {
                return Ok(Some(K2Counterexample {
                    graph: g.clone(),
                    d1: Orientation::from_code(g.clone(), c1),
                    d2: Orientation::from_code(g.clone(), c2),
                }));
            }
        }
    }
    Ok(None)
}
