//! Graph and orientation generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use orientflip::connectivity::lambda_undirected;
use orientflip::gen;
use orientflip::{Orientation, UndirectedMultigraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Graph = Arc<UndirectedMultigraph>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn lambda_g(g: &UndirectedMultigraph) -> usize {
    if g.n() < 2 {
        0
    } else {
        lambda_undirected(g).unwrap()
    }
}

/// Uniform multigraph: `m` edges, each between two distinct random vertices.
pub fn random_multigraph(rng: &mut ChaCha8Rng, n: usize, m: usize) -> UndirectedMultigraph {
    let edges: Vec<(usize, usize)> = (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            (u, v)
        })
        .collect();
    UndirectedMultigraph::build(n, &edges).unwrap()
}

/// Rejection-samples a multigraph on `n` vertices with `m` drawn from
/// `m_lo..=m_hi` and `λ(G) >= min_lambda`.
pub fn random_graph_with_lambda(
    rng: &mut ChaCha8Rng,
    n: usize,
    m_lo: usize,
    m_hi: usize,
    min_lambda: usize,
    attempts: usize,
) -> Option<UndirectedMultigraph> {
    if m_lo > m_hi {
        return None;
    }
    for _ in 0..attempts {
        let m = rng.gen_range(m_lo..=m_hi);
        let g = random_multigraph(rng, n, m);
        if lambda_g(&g) >= min_lambda {
            return Some(g);
        }
    }
    None
}

/// Cycles, complete graphs and their multiples with `n <= max_n`, `m <= max_m`.
pub fn structured_graphs(max_n: usize, max_m: usize) -> Vec<(String, UndirectedMultigraph)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for (name, base) in [("C", gen::cycle(n)), ("K", gen::complete(n))] {
            for factor in 1..=max_m {
                let g = base.duplicated(factor);
                if g.m() > max_m {
                    break;
                }
                out.push((format!("{factor}x{name}{n}"), g));
            }
        }
    }
    out
}

fn edge_key(g: &UndirectedMultigraph) -> (usize, Vec<(usize, usize)>) {
    (g.n(), g.edges().to_vec())
}

/// The graphs of the orientation suite for level `k`: structured graphs and
/// `per_n` random multigraphs for each `n` in `2..=max_n`, all with
/// `λ(G) >= 2k` and at most `max_m` edges, without exact duplicates.
pub fn suite_graphs(k: usize, max_n: usize, max_m: usize, per_n: usize, seed: u64) -> Vec<(String, Graph)> {
    let need = (2 * k).max(1);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (name, g) in structured_graphs(max_n, max_m) {
        if lambda_g(&g) >= need && seen.insert(edge_key(&g)) {
            out.push((name, Arc::new(g)));
        }
    }
    let mut r = rng(seed);
    for n in 2..=max_n {
        let m_lo = (need * n).div_ceil(2).max(n);
        let mut made = 0;
        let mut tries = 0;
        while made < per_n && tries < per_n * 20 {
            tries += 1;
            let Some(g) = random_graph_with_lambda(&mut r, n, m_lo, max_m, need, 400) else {
                break;
            };
            made += 1;
            if seen.insert(edge_key(&g)) {
                out.push((format!("rand-n{n}-{made}"), Arc::new(g)));
            }
        }
    }
    out
}

/// Every orientation code when `2^m <= limit`, otherwise `samples` random ones.
pub fn orientation_codes(g: &UndirectedMultigraph, limit: u64, samples: usize, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let total = 1u64 << g.m();
    if total <= limit {
        (0..total).collect()
    } else {
        (0..samples).map(|_| rng.gen_range(0..total)).collect()
    }
}

pub fn orientation(g: &Graph, code: u64) -> Orientation {
    Orientation::from_code(g.clone(), code)
}

/// Canonical form of a simple graph on `n` vertices under relabelling:
/// the lexicographically smallest sorted edge list.
fn canonical(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut e: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (p[u], p[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        e.sort();
        if best.as_ref().map_or(true, |b| e < *b) {
            best = Some(e);
        }
    });
    best.unwrap_or_default()
}

fn permute(p: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == p.len() {
        f(p);
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permute(p, i + 1, f);
        p.swap(i, j);
    }
}

/// One representative of every connected simple graph on `n` vertices.
pub fn connected_simple_graphs(n: usize) -> Vec<UndirectedMultigraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = UndirectedMultigraph::build(n, &edges).unwrap();
        if !g.is_connected() {
            continue;
        }
        if seen.insert(canonical(n, &edges)) {
            out.push(g);
        }
    }
    out
}

/// A random directed simple path (or, when `want_cycle`, a cycle closed
/// back to the start if possible) in `d`, as arc EdgeIds.
pub fn random_directed_walk(d: &Orientation, rng: &mut ChaCha8Rng, max_len: usize, want_cycle: bool) -> Vec<orientflip::EdgeId> {
    let adj = d.out_adjacency();
    let n = d.n();
    let start = rng.gen_range(0..n);
    let mut visited = vec![false; n];
    visited[start] = true;
    let mut cur = start;
    let mut edges = Vec::new();
    while edges.len() < max_len {
        let mut options: Vec<_> = adj[cur].clone();
        options.shuffle(rng);
        if want_cycle && edges.len() >= 1 {
            if let Some(&(e, _)) = options.iter().find(|&&(e, h)| h.0 == start && !edges.contains(&e)) {
                edges.push(e);
                return edges;
            }
        }
        let Some(&(e, h)) = options.iter().find(|&&(_, h)| !visited[h.0]) else {
            break;
        };
        visited[h.0] = true;
        edges.push(e);
        cur = h.0;
    }
    edges
}
