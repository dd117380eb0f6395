//! Shared oracles for integration tests.
//!
//! Everything here recomputes results through routes independent of the
//! library paths under test: distances come from Floyd–Warshall instead of
//! BFS, the index sum runs over ordered pairs and halves at the end, and
//! the exhaustive enumeration picks edge subsets instead of growing trees.

// each test binary compiles this module and uses a different subset
#![allow(dead_code)]

use itertools::Itertools;
use rand::prelude::*;
use uniharary::canon::{canonical_certificate, CanonicalCertificate};
use uniharary::enumerate::tree_from_prufer;
use uniharary::graph::Graph;
use uniharary::rational::Rational;

pub const UNREACHED: u32 = u32::MAX / 4;

/// Naive Floyd–Warshall distances, independent of the library's BFS.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut d = vec![vec![UNREACHED; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Independent H_A: ordered-pair double loop over Floyd–Warshall distances,
/// halved at the end.
pub fn brute_force_h_a(g: &Graph) -> Rational {
    let n = g.vertex_count();
    let d = floyd_warshall(g);
    let mut doubled = Rational::zero();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            assert!(d[u][v] < UNREACHED, "oracle needs a connected graph");
            doubled += Rational::new((g.degree(u) + g.degree(v)) as i64, d[u][v] as i64).unwrap();
        }
    }
    doubled.checked_div(&Rational::integer(2)).unwrap()
}

fn connected_via_edges(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}

/// Exhaustive-filter enumeration: every way to choose `n` edges among the
/// `C(n,2)` pairs, kept when connected (hence unicyclic), deduped by
/// certificate.
pub fn exhaustive_unicyclic_certs(n: usize) -> Vec<CanonicalCertificate> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut certs = std::collections::BTreeSet::new();
    for chosen in pairs.iter().copied().combinations(n) {
        if !connected_via_edges(n, &chosen) {
            continue;
        }
        let g = Graph::from_edges(n, &chosen).expect("distinct pairs form a simple graph");
        certs.insert(canonical_certificate(&g).unwrap());
    }
    certs.into_iter().collect()
}

/// Pseudo-random unicyclic graph: a uniform Prüfer tree plus one uniformly
/// chosen non-tree edge.
pub fn random_unicyclic(n: usize, rng: &mut StdRng) -> Graph {
    assert!(n >= 3);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let tree = tree_from_prufer(&seq).unwrap();
    let non_edges: Vec<(usize, usize)> = (0..n)
        .tuple_combinations()
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .collect();
    let &(u, v) = non_edges.choose(rng).expect("n >= 3 trees have a non-edge");
    let mut edges = tree.edges();
    edges.push((u, v));
    Graph::from_edges(n, &edges).unwrap()
}
