//! Isomorphism-free enumeration of unicyclic graphs.
//!
//! Every labeled tree on `n` vertices is generated from its Prüfer
//! sequence; adding one edge between a non-adjacent pair yields a labeled
//! unicyclic graph. A graph whose cycle has `c` edges arises from exactly
//! `c` such (tree, edge) pairs, so a pair is accepted only when the added
//! edge is the lexicographically smallest cycle edge — each labeled graph
//! is visited once. Canonical certificates then collapse labelings into
//! isomorphism classes.
//!
//! The sequence space is partitioned into independent chunks for rayon;
//! each worker fills its own certificate set and the sets merge into one
//! ordered result, so output is deterministic regardless of scheduling.

use crate::canon::{canonical_columns, pack_certificate, CanonicalCertificate, MAX_CANON_N};
use crate::graph::Graph;
use rayon::prelude::*;
use std::collections::BTreeSet;
use thiserror::Error;

/// Enumeration ceiling when `UNIHARARY_MAX_N` is unset.
pub const DEFAULT_MAX_N: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("enumeration supports 3..={max} vertices, got {n}")]
    OutOfRange { n: usize, max: usize },
    #[error("UNIHARARY_MAX_N must be an integer in 3..={}, got {value:?}", MAX_CANON_N)]
    InvalidCeiling { value: String },
    #[error("Prüfer label {label} out of range for {n} vertices")]
    InvalidPruferLabel { label: usize, n: usize },
}

/// The active enumeration ceiling: `UNIHARARY_MAX_N` when set (validated
/// against the certificate limit), otherwise [`DEFAULT_MAX_N`].
pub fn enumeration_ceiling() -> Result<usize, EnumerateError> {
    match std::env::var("UNIHARARY_MAX_N") {
        Err(_) => Ok(DEFAULT_MAX_N),
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(v) if (3..=MAX_CANON_N).contains(&v) => Ok(v),
            _ => Err(EnumerateError::InvalidCeiling { value: raw }),
        },
    }
}

/// Decodes a Prüfer sequence into the labeled tree on `len + 2` vertices.
pub fn tree_from_prufer(seq: &[usize]) -> Result<Graph, EnumerateError> {
    let n = seq.len() + 2;
    if let Some(&label) = seq.iter().find(|&&s| s >= n) {
        return Err(EnumerateError::InvalidPruferLabel { label, n });
    }
    let mut edges = Vec::with_capacity(n - 1);
    decode_prufer(seq, n, |u, v| edges.push((u, v)));
    Ok(Graph::from_edges(n, &edges).expect("Prüfer decode yields a simple tree"))
}

// classic linear-time decode; emits the n-1 tree edges
fn decode_prufer(seq: &[usize], n: usize, mut emit: impl FnMut(usize, usize)) {
    debug_assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &s in seq {
        emit(leaf, s);
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    emit(leaf, n - 1);
}

/// One certificate per isomorphism class of unicyclic graphs on `n`
/// vertices, in certificate order.
pub fn unicyclic_class_certificates(
    n: usize,
) -> Result<Vec<CanonicalCertificate>, EnumerateError> {
    let max = enumeration_ceiling()?;
    if !(3..=max).contains(&n) {
        return Err(EnumerateError::OutOfRange { n, max });
    }
    let total = (n as u64).pow((n - 2) as u32);
    let classes = (0..total)
        .into_par_iter()
        .fold(BTreeSet::new, |mut acc: BTreeSet<CanonicalCertificate>, s| {
            scan_sequence(n, s, &mut acc);
            acc
        })
        .reduce(BTreeSet::new, |mut a, mut b| {
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            a.extend(b);
            a
        });
    Ok(classes.into_iter().collect())
}

/// Canonical representative graphs, one per isomorphism class, in
/// certificate order.
pub fn enumerate_unicyclic(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    Ok(unicyclic_class_certificates(n)?
        .iter()
        .map(|c| c.to_graph().expect("internally built certificates decode"))
        .collect())
}

// all unicyclic graphs reachable from the labeled tree numbered `s`
fn scan_sequence(n: usize, s: u64, out: &mut BTreeSet<CanonicalCertificate>) {
    let mut seq = [0usize; MAX_CANON_N];
    let mut acc = s;
    for slot in seq.iter_mut().take(n - 2) {
        *slot = (acc % n as u64) as usize;
        acc /= n as u64;
    }

    let mut rows = [0u16; MAX_CANON_N];
    decode_prufer(&seq[..n - 2], n, |u, v| {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    });

    for u in 0..n {
        for v in (u + 1)..n {
            if rows[u] & (1 << v) != 0 {
                continue;
            }
            // the created cycle is the tree path u..v plus (u, v); accept
            // only if (u, v) is its lexicographically smallest edge
            if !added_edge_is_min_cycle_edge(&rows, u, v) {
                continue;
            }
            let mut with_edge = rows;
            with_edge[u] |= 1 << v;
            with_edge[v] |= 1 << u;
            let cols = canonical_columns(n, &with_edge);
            out.insert(pack_certificate(n, &cols));
        }
    }
}

fn added_edge_is_min_cycle_edge(rows: &[u16; MAX_CANON_N], u: usize, v: usize) -> bool {
    // parents of a DFS from u over the tree
    let mut parent = [usize::MAX; MAX_CANON_N];
    let mut stack = [0usize; MAX_CANON_N];
    let mut len = 1;
    stack[0] = u;
    parent[u] = u;
    while len > 0 {
        len -= 1;
        let cur = stack[len];
        if cur == v {
            break;
        }
        let mut nbrs = rows[cur];
        while nbrs != 0 {
            let w = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if parent[w] == usize::MAX {
                parent[w] = cur;
                stack[len] = w;
                len += 1;
            }
        }
    }
    debug_assert!(parent[v] != usize::MAX, "tree is connected");
    debug_assert!(u < v);
    let mut cur = v;
    while cur != u {
        let p = parent[cur];
        let edge = (p.min(cur), p.max(cur));
        if edge < (u, v) {
            return false;
        }
        cur = p;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{classify, GraphClass};

    #[test]
    fn prufer_decode_reference_trees() {
        // star centered at 0
        let star = tree_from_prufer(&[0, 0]).unwrap();
        assert_eq!(star.edges(), vec![(0, 1), (0, 2), (0, 3)]);
        // path 0-3-2-1
        let path = tree_from_prufer(&[3, 2]).unwrap();
        assert_eq!(path.edges(), vec![(0, 3), (1, 2), (2, 3)]);
        assert_eq!(
            tree_from_prufer(&[4, 0]),
            Err(EnumerateError::InvalidPruferLabel { label: 4, n: 4 })
        );
    }

    #[test]
    fn prufer_decode_covers_all_labeled_trees() {
        // Cayley: 4^2 = 16 distinct trees on 4 vertices
        let mut seen = std::collections::BTreeSet::new();
        for a in 0..4 {
            for b in 0..4 {
                let t = tree_from_prufer(&[a, b]).unwrap();
                assert_eq!(classify(&t), GraphClass::Tree);
                seen.insert(t.edges());
            }
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn smallest_class_counts() {
        assert_eq!(unicyclic_class_certificates(3).unwrap().len(), 1);
        assert_eq!(unicyclic_class_certificates(4).unwrap().len(), 2);
        assert_eq!(unicyclic_class_certificates(5).unwrap().len(), 5);
    }

    #[test]
    fn representatives_are_unicyclic_and_sorted() {
        let reps = enumerate_unicyclic(6).unwrap();
        assert_eq!(reps.len(), 13);
        let mut certs = Vec::new();
        for g in &reps {
            assert_eq!(classify(g), GraphClass::Unicyclic);
            certs.push(crate::canon::canonical_certificate(g).unwrap());
        }
        let mut sorted = certs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(certs, sorted);
    }

    #[test]
    fn range_is_enforced() {
        assert!(matches!(
            unicyclic_class_certificates(2),
            Err(EnumerateError::OutOfRange { n: 2, .. })
        ));
        assert!(matches!(
            unicyclic_class_certificates(13),
            Err(EnumerateError::OutOfRange { n: 13, .. })
        ));
    }
}
