//! Canonical certificates for small graphs.
//!
//! The certificate is the minimum upper-triangle adjacency bit string over
//! all vertex orderings whose degree sequence is sorted ascending. Since
//! isomorphisms preserve degrees, two graphs get equal certificates exactly
//! when they are isomorphic; restricting to degree-sorted orderings prunes
//! the search enough for the supported range. Bits are taken column by
//! column, `(0,1), (0,2), (1,2), (0,3), ...`, which lets the search compare
//! and prune one placement at a time.

use crate::graph::Graph;
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

/// Largest vertex count the certificate search accepts.
pub const MAX_CANON_N: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CanonError {
    #[error("certificates support at most {max} vertices, got {n}")]
    GraphTooLarge { n: usize, max: usize },
    #[error("malformed certificate bytes")]
    Malformed,
}

/// Label-invariant byte string identifying an isomorphism class.
///
/// Layout: one byte for the vertex count, then the canonical adjacency bits
/// packed most-significant-first. The adjacency is recoverable, see
/// [`CanonicalCertificate::to_graph`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCertificate(Vec<u8>);

impl CanonicalCertificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Rebuilds the canonical representative graph encoded by this
    /// certificate.
    pub fn to_graph(&self) -> Result<Graph, CanonError> {
        let (&n, bits) = self.0.split_first().ok_or(CanonError::Malformed)?;
        let n = n as usize;
        if n > MAX_CANON_N {
            return Err(CanonError::Malformed);
        }
        let pair_count = n * (n - 1) / 2;
        if bits.len() != pair_count.div_ceil(8) {
            return Err(CanonError::Malformed);
        }
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                let bit = (bits[idx / 8] >> (7 - idx % 8)) & 1;
                if bit == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        Graph::from_edges(n, &edges).map_err(|_| CanonError::Malformed)
    }
}

impl fmt::Display for CanonicalCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// Computes the certificate of a graph on at most [`MAX_CANON_N`] vertices.
pub fn canonical_certificate(g: &Graph) -> Result<CanonicalCertificate, CanonError> {
    let n = g.vertex_count();
    if n > MAX_CANON_N {
        return Err(CanonError::GraphTooLarge { n, max: MAX_CANON_N });
    }
    let mut rows = [0u16; MAX_CANON_N];
    for v in 0..n {
        for &u in g.neighbors(v) {
            rows[v] |= 1 << u;
        }
    }
    let cols = canonical_columns(n, &rows);
    Ok(pack_certificate(n, &cols))
}

/// Canonical column values for an adjacency given as bitmask rows.
/// Column `j` (1-based position) holds `j` bits, pair `(i, j)` at bit
/// `j - 1 - i`, so smaller column values sort earlier pairs first.
pub(crate) fn canonical_columns(n: usize, rows: &[u16; MAX_CANON_N]) -> Vec<u16> {
    if n <= 1 {
        return Vec::new();
    }
    let mut target_deg: Vec<u32> = (0..n).map(|v| rows[v].count_ones()).collect();
    target_deg.sort_unstable();

    let degs: Vec<u32> = (0..n).map(|v| rows[v].count_ones()).collect();
    let mut search = Search {
        n,
        rows,
        degs: &degs,
        target_deg: &target_deg,
        placed: Vec::with_capacity(n),
        cols: Vec::with_capacity(n - 1),
        best: None,
    };
    search.dfs(0, Ordering::Equal);
    search.best.expect("search places all vertices")
}

struct Search<'a> {
    n: usize,
    rows: &'a [u16; MAX_CANON_N],
    degs: &'a [u32],
    target_deg: &'a [u32],
    placed: Vec<usize>,
    cols: Vec<u16>,
    best: Option<Vec<u16>>,
}

impl Search<'_> {
    /// `state` is the lexicographic relation of the columns built so far to
    /// the current best prefix. Branches already greater are pruned; when a
    /// subtree improves the best, the relation here resets to `Equal`
    /// because the new best runs through this very prefix.
    ///
    /// Returns true when the subtree updated the best.
    fn dfs(&mut self, pos: usize, mut state: Ordering) -> bool {
        if pos == self.n {
            if self.best.is_none() || state == Ordering::Less {
                self.best = Some(self.cols.clone());
                return true;
            }
            return false;
        }
        // explore smaller columns first so the minimum is found early
        let mut candidates: Vec<(u16, usize)> = Vec::new();
        for v in 0..self.n {
            if self.placed.contains(&v) || self.degs[v] != self.target_deg[pos] {
                continue;
            }
            let mut col = 0u16;
            for (i, &p) in self.placed.iter().enumerate() {
                if self.rows[v] & (1 << p) != 0 {
                    col |= 1 << (pos - 1 - i);
                }
            }
            candidates.push((col, v));
        }
        candidates.sort_unstable();

        let mut updated = false;
        for (col, v) in candidates {
            let child_state = match state {
                Ordering::Less => Ordering::Less,
                Ordering::Equal => match &self.best {
                    None => Ordering::Less,
                    Some(_) if pos == 0 => Ordering::Equal,
                    Some(best) => match col.cmp(&best[pos - 1]) {
                        Ordering::Greater => break, // sorted: the rest are greater too
                        other => other,
                    },
                },
                Ordering::Greater => unreachable!("greater branches are pruned"),
            };
            self.placed.push(v);
            if pos > 0 {
                self.cols.push(col);
            }
            if self.dfs(pos + 1, child_state) {
                updated = true;
                state = Ordering::Equal;
            }
            if pos > 0 {
                self.cols.pop();
            }
            self.placed.pop();
        }
        updated
    }
}

pub(crate) fn pack_certificate(n: usize, cols: &[u16]) -> CanonicalCertificate {
    let pair_count = if n >= 2 { n * (n - 1) / 2 } else { 0 };
    let mut bytes = vec![n as u8];
    bytes.resize(1 + pair_count.div_ceil(8), 0u8);
    let mut idx = 0;
    for (j, &col) in cols.iter().enumerate() {
        let width = j + 1;
        for bit_pos in (0..width).rev() {
            if col & (1 << bit_pos) != 0 {
                bytes[1 + idx / 8] |= 1 << (7 - idx % 8);
            }
            idx += 1;
        }
    }
    CanonicalCertificate(bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_cp, make_cs, make_cycle};

    #[test]
    fn invariant_under_relabeling() {
        let k3 = make_cycle(3).unwrap();
        let base = canonical_certificate(&k3).unwrap();
        for perm in [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [1, 0, 2], [2, 1, 0]] {
            let h = k3.relabel(&perm).unwrap();
            assert_eq!(canonical_certificate(&h).unwrap(), base);
        }
    }

    #[test]
    fn c4_has_one_certificate_over_all_labelings() {
        let c4 = make_cycle(4).unwrap();
        let base = canonical_certificate(&c4).unwrap();
        let mut perm = [0, 1, 2, 3];
        // iterate all 4! permutations via Heap's algorithm
        let mut stack = [0usize; 4];
        let mut i = 0;
        let mut seen = 1;
        while i < 4 {
            if stack[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(stack[i], i);
                }
                let h = c4.relabel(&perm).unwrap();
                assert_eq!(canonical_certificate(&h).unwrap(), base);
                seen += 1;
                stack[i] += 1;
                i = 0;
            } else {
                stack[i] = 0;
                i += 1;
            }
        }
        assert_eq!(seen, 24);
    }

    #[test]
    fn distinguishes_non_isomorphic_graphs() {
        let cs = canonical_certificate(&make_cs(3, 2).unwrap()).unwrap();
        let cp = canonical_certificate(&make_cp(3, 2).unwrap()).unwrap();
        assert_ne!(cs, cp);
    }

    #[test]
    fn certificate_roundtrips_to_canonical_graph() {
        for g in [make_cs(4, 3).unwrap(), make_cp(5, 2).unwrap(), make_cycle(7).unwrap()] {
            let cert = canonical_certificate(&g).unwrap();
            let rep = cert.to_graph().unwrap();
            assert_eq!(canonical_certificate(&rep).unwrap(), cert);
            assert_eq!(rep.vertex_count(), g.vertex_count());
            assert_eq!(rep.edge_count(), g.edge_count());
        }
    }

    #[test]
    fn size_cap_enforced() {
        let big = make_cycle(13).unwrap();
        assert_eq!(
            canonical_certificate(&big),
            Err(CanonError::GraphTooLarge { n: 13, max: 12 })
        );
    }
}
