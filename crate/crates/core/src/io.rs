//! Plain-text graph and orientation files.
//!
//! Graph file: first line `n m`, then `m` lines `u v`. Line `i` of the edge
//! block defines EdgeId `i - 1` (counting the header as line 0). Orientation
//! file: `m` characters `0`/`1`, one per EdgeId, `0` meaning the stored
//! `(u, v)` direction; whitespace is ignored. In both, lines whose first
//! non-blank character is `#` are comments.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::multigraph::{Orientation, UndirectedMultigraph};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line, "expected two integers"))?;
        tok.parse()
            .map_err(|_| parse_err(line, format!("not a non-negative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(parse_err(line, "expected exactly two integers"));
    }
    Ok((a, b))
}

pub fn parse_graph(text: &str) -> Result<UndirectedMultigraph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let (n, m) = two_numbers(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        if edges.len() == m {
            return Err(parse_err(line, format!("more than the declared {m} edges")));
        }
        let (u, v) = two_numbers(line, body)?;
        if u >= n || v >= n {
            return Err(parse_err(line, format!("endpoint out of range for n = {n}")));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            text.lines().count().max(1),
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    UndirectedMultigraph::build(n, &edges)
}

pub fn format_graph(g: &UndirectedMultigraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_orientation(text: &str, graph: Arc<UndirectedMultigraph>) -> Result<Orientation> {
    let mut bits = Vec::with_capacity(graph.m());
    for (line, body) in content_lines(text) {
        for c in body.chars().filter(|c| !c.is_whitespace()) {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(parse_err(line, format!("unexpected character {other:?}"))),
            }
        }
    }
    if bits.len() != graph.m() {
        return Err(parse_err(
            text.lines().count().max(1),
            format!("expected {} direction bits, found {}", graph.m(), bits.len()),
        ));
    }
    Orientation::from_bits(graph, bits)
}

pub fn format_orientation(d: &Orientation) -> String {
    let mut s = d.bitstring();
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_graph_with_comments() {
        let g = parse_graph("# triangle\n3 3\n0 1\n\n1 2\n# last\n2 0\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("2 1\n0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("2 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("2 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("2 1\n0 1\n1 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("2 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn parses_orientation_ignoring_whitespace() {
        let g = Arc::new(parse_graph("3 3\n0 1\n1 2\n2 0\n").unwrap());
        let d = parse_orientation("# cw\n1 0\n1\n", g.clone()).unwrap();
        assert_eq!(d.bitstring(), "101");
        assert!(parse_orientation("10", g.clone()).is_err());
        assert!(parse_orientation("10a", g).is_err());
    }
}
