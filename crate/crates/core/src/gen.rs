//! Deterministic test graphs: cycles, complete graphs, and their multiples.

use crate::multigraph::UndirectedMultigraph;

/// Cycle `0 - 1 - ... - (n-1) - 0`, edge `i` joining `i` and `i+1 mod n`.
pub fn cycle(n: usize) -> UndirectedMultigraph {
    assert!(n >= 2, "a cycle needs at least two vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    UndirectedMultigraph::build(n, &edges).expect("cycle edges are valid")
}

/// Complete graph with edges `(u, v)`, `u < v`, in lexicographic order.
pub fn complete(n: usize) -> UndirectedMultigraph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    UndirectedMultigraph::build(n, &edges).expect("complete graph edges are valid")
}
