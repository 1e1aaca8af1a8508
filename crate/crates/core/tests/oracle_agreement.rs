//! Fast algorithms against exhaustive enumeration on small instances.

mod common;

use std::sync::Arc;

use common::{lambda_g, orientation, rng, suite_graphs, Graph};
use orientflip::connectivity::{lambda_directed, max_flow, x_in, x_out};
use orientflip::flip_core::{build_flip_path, choose_r_set, path_to_minimal_out, RCase, SafeKind};
use orientflip::gen;
use orientflip::oracle::{build_flip_graph, check_r_sets, check_safety, OracleCaps};
use orientflip::{Orientation, VertexId, VertexSet, ROOT};
use rand::Rng;

fn caps() -> OracleCaps {
    OracleCaps::default()
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (1u64..1 << n).map(move |m| VertexSet::from_mask(n, m))
}

/// Members of `F_out` (`out = true`) or `F_in` at level `k`, by enumeration.
fn family(d: &Orientation, k: usize, out: bool) -> Vec<VertexSet> {
    subsets(d.n())
        .filter(|x| {
            x.is_full()
                || (!x.contains(ROOT)
                    && if out {
                        d.out_degree_of_set(x) == k
                    } else {
                        d.in_degree_of_set(x) == k
                    })
        })
        .collect()
}

fn is_minimal_in(x: &VertexSet, fam: &[VertexSet]) -> bool {
    fam.contains(x) && !fam.iter().any(|y| y.is_proper_subset(x))
}

/// Independent reachability test, written directly on the arc list.
fn strongly_connected(d: &Orientation) -> bool {
    let n = d.n();
    let reach = |fwd: bool| {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for (_, t, h) in d.arcs() {
                let (a, b) = if fwd { (t.0, h.0) } else { (h.0, t.0) };
                if seen[a] && !seen[b] {
                    seen[b] = true;
                    changed = true;
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    reach(true) && reach(false)
}

fn count_strong(g: &Graph) -> usize {
    (0..1u64 << g.m()).filter(|&c| strongly_connected(&orientation(g, c))).count()
}

#[test]
fn strong_orientation_counts() {
    let c3 = Arc::new(gen::cycle(3));
    let k4 = Arc::new(gen::complete(4));
    let c4x2 = Arc::new(gen::cycle(4).duplicated(2));
    for g in [&c3, &k4, &c4x2] {
        let fg = build_flip_graph(g, 1, &caps()).unwrap();
        assert_eq!(fg.node_count(), count_strong(g));
    }
    // frozen after the independent count above
    assert_eq!(count_strong(&c3), 2);
    assert_eq!(count_strong(&k4), 24);
    let fg = build_flip_graph(&k4, 1, &caps()).unwrap();
    assert!(fg.is_connected());
}

#[test]
fn max_flow_matches_minimum_cut_enumeration() {
    let mut r = rng(21);
    for _ in 0..300 {
        let n = r.gen_range(2..=6);
        let m = r.gen_range(1..=12);
        let g = Arc::new(common::random_multigraph(&mut r, n, m));
        let d = orientation(&g, r.gen_range(0..1u64 << m));
        let s = VertexId(r.gen_range(0..n));
        let t = VertexId((s.0 + r.gen_range(1..n)) % n);
        let cut = max_flow(&d, s, t).unwrap();
        let brute = subsets(n)
            .filter(|x| x.contains(s) && !x.contains(t))
            .map(|x| d.out_degree_of_set(&x))
            .min()
            .unwrap();
        assert_eq!(cut.value, brute);
        assert_eq!(d.out_degree_of_set(&cut.min_source_side), brute);
        assert_eq!(d.out_degree_of_set(&cut.max_source_side), brute);
        assert!(cut.min_source_side.is_subset(&cut.max_source_side));
    }
}

#[test]
fn minimal_tight_set_through_a_vertex() {
    for (_, g) in suite_graphs(1, 5, 10, 10, 22) {
        if lambda_g(&g) < 4 {
            continue;
        }
        for code in (0..1u64 << g.m()).step_by(7) {
            let d = orientation(&g, code);
            let Ok(l) = lambda_directed(&d) else { continue };
            for k in 1..=l.min(2) {
                let f_out = family(&d, k, true);
                let f_in = family(&d, k, false);
                for v in (1..g.n()).map(VertexId) {
                    for (got, fam) in [(x_out(&d, v, k).unwrap(), &f_out), (x_in(&d, v, k).unwrap(), &f_in)] {
                        let through: Vec<_> = fam.iter().filter(|x| x.contains(v)).cloned().collect();
                        let meet = through.iter().fold(VertexSet::full(g.n()), |a, x| a.intersection(x));
                        assert_eq!(got, meet, "{:?} {} v={v}", g.edges(), d.bitstring());
                        assert!(fam.contains(&got));
                    }
                }
            }
        }
    }
}

#[test]
fn paths_to_minimal_out_avoid_tight_boundaries() {
    for (_, g) in suite_graphs(1, 5, 10, 10, 23) {
        if lambda_g(&g) < 4 {
            continue;
        }
        for code in (0..1u64 << g.m()).step_by(5) {
            let d = orientation(&g, code);
            if lambda_directed(&d).unwrap() != 1 {
                continue;
            }
            let f_out = family(&d, 1, true);
            for s in (1..g.n()).map(VertexId) {
                let (t_set, paths) = path_to_minimal_out(&d, s, 1).unwrap();
                assert!(is_minimal_in(&t_set, &f_out));
                assert_eq!(paths.keys().copied().collect::<Vec<_>>(), t_set.iter().collect::<Vec<_>>());
                for (&t, p) in &paths {
                    assert_eq!(p.start(), s);
                    assert_eq!(p.end(), t);
                    for (i, &e) in p.edges.iter().enumerate() {
                        let (a, b) = d.arc(e);
                        assert_eq!((a, b), (p.vertices[i], p.vertices[i + 1]));
                        assert!(!f_out.iter().any(|x| x.contains(a) && !x.contains(b)));
                    }
                }
            }
        }
    }
}

/// Conditions 1–3 of the flip-path construction, audited against the
/// enumerated families of `work` (the orientation the path is built in).
fn audit_flip_path(work: &Orientation, r_set: &VertexSet, k: usize) {
    let ctx = || format!("{:?} {} R={r_set:?}", work.graph().edges(), work.bitstring());
    let f_out = family(work, k, true);
    let f_in = family(work, k, false);
    let f_out_r: Vec<_> = f_out.iter().filter(|x| x.is_proper_subset(r_set)).cloned().collect();
    assert!(!f_out_r.is_empty(), "{}", ctx());

    let p = build_flip_path(work, r_set, k).unwrap();
    let mut seen = VertexSet::empty(work.n());
    for &v in &p.vertices {
        assert!(r_set.contains(v), "{}", ctx());
        assert!(!seen.contains(v), "path repeats {v}: {}", ctx());
        seen.insert(v);
    }
    for (i, &e) in p.edges.iter().enumerate() {
        assert_eq!(work.arc(e), (p.vertices[i], p.vertices[i + 1]), "{}", ctx());
    }

    // 1: safe endpoints of minimal tight sets
    let (s, t) = (p.vertices[0], *p.vertices.last().unwrap());
    assert_eq!((p.source.vertex, p.sink.vertex), (s, t));
    assert!(is_minimal_in(&p.source.set, &f_in) && p.source.set.is_subset(r_set), "{}", ctx());
    assert!(is_minimal_in(&p.sink.set, &f_out) && p.sink.set.is_proper_subset(r_set), "{}", ctx());
    assert!(check_safety(work, &p.source.set, s, k, SafeKind::Source, &caps()).unwrap(), "{}", ctx());
    assert!(check_safety(work, &p.sink.set, t, k, SafeKind::Sink, &caps()).unwrap(), "{}", ctx());

    // 2: Q1 meets no member of F^R_out before t'
    let t_prime = p.vertices[p.q1_end];
    for &v in &p.vertices[..p.q1_end] {
        assert!(!f_out_r.iter().any(|x| x.contains(v)), "{}", ctx());
    }
    assert!(f_out_r.iter().any(|x| x.contains(t_prime)), "{}", ctx());

    // 3: Q2 leaves no member of F_out, and stays inside some T' ⊇ T
    for &e in &p.edges[p.q1_end..] {
        let (a, b) = work.arc(e);
        assert!(!f_out.iter().any(|x| x.contains(a) && !x.contains(b)), "{}", ctx());
    }
    let q2 = VertexSet::from_vertices(work.n(), p.vertices[p.q1_end..].iter().map(|v| v.0));
    assert!(
        f_out_r.iter().any(|x| q2.is_subset(x) && p.sink.set.is_subset(x)),
        "{}",
        ctx()
    );
}

#[test]
fn flip_path_conditions_hold_exhaustively() {
    let mut audited = 0;
    for (_, g) in suite_graphs(1, 6, 12, 15, 24) {
        if lambda_g(&g) < 4 {
            continue;
        }
        for code in 0..1u64 << g.m() {
            let d = orientation(&g, code);
            if lambda_directed(&d).unwrap() != 1 {
                continue;
            }
            let (r_set, case) = choose_r_set(&d, 1).unwrap();
            let minimal = check_r_sets(&d, 1, &caps()).unwrap();
            assert!(minimal.contains(&(r_set.clone(), case)), "{:?} {}", g.edges(), d.bitstring());
            let work = match case {
                RCase::A => d.clone(),
                RCase::B => d.reversed(),
            };
            audit_flip_path(&work, &r_set, 1);
            audited += 1;
        }
    }
    assert!(audited > 1000, "only {audited} instances");
}

#[test]
fn flip_path_rejects_sets_outside_f_in() {
    let g = Arc::new(gen::complete(4).duplicated(2));
    let d = (0..1u64 << g.m())
        .map(|c| orientation(&g, c))
        .find(|d| lambda_directed(d).unwrap() == 1)
        .unwrap();
    let f_in = family(&d, 1, false);
    let outside = subsets(4).find(|x| !f_in.contains(x)).unwrap();
    assert!(build_flip_path(&d, &outside, 1).is_err());
}
