//! Constructors for the cycle, cycle-star and cycle-path families.
//!
//! Vertex numbering is fixed so constructed graphs are reproducible
//! bit-for-bit: cycle vertices come first as `0..c-1` in cycle order,
//! followed by pendant vertices grouped by anchor in anchor order. Within a
//! pendant path, vertices are numbered outward from the cycle.

use crate::graph::{Graph, GraphError};

/// The cycle `C_n`.
pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooShort(n));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle of length `c` with `leaf_counts[i]` leaves attached to cycle
/// vertex `i`.
pub fn make_cycle_star(c: usize, leaf_counts: &[usize]) -> Result<Graph, GraphError> {
    if c < 3 {
        return Err(GraphError::CycleTooShort(c));
    }
    if leaf_counts.len() != c {
        return Err(GraphError::CountMismatch { expected: c, got: leaf_counts.len() });
    }
    let n = c + leaf_counts.iter().sum::<usize>();
    let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    let mut next = c;
    for (w, &count) in leaf_counts.iter().enumerate() {
        for _ in 0..count {
            edges.push((w, next));
            next += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Cycle of length `c` with a pendant path of `path_lengths[i]` vertices
/// attached to cycle vertex `i`.
pub fn make_cycle_path(c: usize, path_lengths: &[usize]) -> Result<Graph, GraphError> {
    if c < 3 {
        return Err(GraphError::CycleTooShort(c));
    }
    if path_lengths.len() != c {
        return Err(GraphError::CountMismatch { expected: c, got: path_lengths.len() });
    }
    let n = c + path_lengths.iter().sum::<usize>();
    let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    let mut next = c;
    for (w, &len) in path_lengths.iter().enumerate() {
        let mut prev = w;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// `CS_{k,t}`: cycle of length `k` with all `t` leaves on vertex 0.
pub fn make_cs(k: usize, leaves: usize) -> Result<Graph, GraphError> {
    if k < 3 {
        return Err(GraphError::CycleTooShort(k));
    }
    let mut counts = vec![0; k];
    counts[0] = leaves;
    make_cycle_star(k, &counts)
}

/// `CP_{k,t}`: cycle of length `k` with one pendant path of `t` vertices on
/// vertex 0.
pub fn make_cp(k: usize, tail: usize) -> Result<Graph, GraphError> {
    if k < 3 {
        return Err(GraphError::CycleTooShort(k));
    }
    let mut lengths = vec![0; k];
    lengths[0] = tail;
    make_cycle_path(k, &lengths)
}
