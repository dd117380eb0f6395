//! Simple undirected graphs on vertex ids `0..n-1` with exact hop distances.

use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("expected {expected} per-cycle-vertex counts, got {got}")]
    CountMismatch { expected: usize, got: usize },
    #[error("relabeling is not a bijection on 0..{0}")]
    InvalidRelabeling(usize),
}

/// Simple undirected graph: no self-loops, no parallel edges, symmetric
/// adjacency, sorted neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges (in either orientation) and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.distances().all_finite()
    }

    /// Exact hop distances from every vertex, by BFS. Unreachable pairs are
    /// kept as a distinguished infinity marker; query through
    /// [`DistanceMatrix::get`].
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.vertex_count();
        let mut d = vec![DistanceMatrix::INFINITY; n * n];
        let mut queue = VecDeque::new();
        for src in 0..n {
            let row = &mut d[src * n..(src + 1) * n];
            row[src] = 0;
            queue.clear();
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &v in &self.adj[u] {
                    if row[v] == DistanceMatrix::INFINITY {
                        row[v] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        DistanceMatrix { n, d }
    }

    /// Applies a vertex bijection, `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n || !perm.iter().all(|&p| p < n && !std::mem::replace(&mut seen[p], true)) {
            return Err(GraphError::InvalidRelabeling(n));
        }
        let edges: Vec<(usize, usize)> =
            self.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(n, &edges)
    }
}

/// Symmetric matrix of BFS hop counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    const INFINITY: u32 = u32::MAX;

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Hop distance, or `None` when `v` is unreachable from `u`.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.d[u * self.n + v];
        (d != Self::INFINITY).then_some(d)
    }

    /// True iff every pair is reachable, i.e. the graph is connected.
    pub fn all_finite(&self) -> bool {
        self.d.iter().all(|&x| x != Self::INFINITY)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    Tree,
    Unicyclic,
    Other,
}

/// Classifies by edge count: a connected graph with `n` edges is unicyclic,
/// with `n - 1` edges a tree; anything else (including every disconnected
/// graph) is `Other`.
pub fn classify(g: &Graph) -> GraphClass {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n == 0 || !g.is_connected() {
        return GraphClass::Other;
    }
    if m == n {
        GraphClass::Unicyclic
    } else if m == n - 1 {
        GraphClass::Tree
    } else {
        GraphClass::Other
    }
}
