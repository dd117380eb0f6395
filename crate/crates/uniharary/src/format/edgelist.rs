//! Whitespace-tolerant edge-list format: a `n m` header followed by `m`
//! `u v` pairs of 0-based vertex ids.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("missing `n m` header")]
    MissingHeader,
    #[error("token {0:?} is not a non-negative integer")]
    BadToken(String),
    #[error("header declares {declared} edges but {found} endpoint tokens follow")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses an edge list. Any whitespace separates tokens, so line breaks are
/// cosmetic.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut tokens = text.split_whitespace();
    let next_number = |tok: Option<&str>| -> Result<Option<usize>, EdgeListError> {
        match tok {
            None => Ok(None),
            Some(t) => t
                .parse::<usize>()
                .map(Some)
                .map_err(|_| EdgeListError::BadToken(t.to_string())),
        }
    };
    let n = next_number(tokens.next())?.ok_or(EdgeListError::MissingHeader)?;
    let m = next_number(tokens.next())?.ok_or(EdgeListError::MissingHeader)?;
    let rest: Vec<&str> = tokens.collect();
    if rest.len() != 2 * m {
        return Err(EdgeListError::EdgeCountMismatch { declared: m, found: rest.len() });
    }
    let mut edges = Vec::with_capacity(m);
    for pair in rest.chunks_exact(2) {
        let u = next_number(Some(pair[0]))?.expect("token present");
        let v = next_number(Some(pair[1]))?.expect("token present");
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Emits the canonical edge-list text: header line, then each edge as
/// `u v` with `u < v`, sorted.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_reference_inputs() {
        let k3 = parse_edge_list("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(k3.edges(), vec![(0, 1), (0, 2), (1, 2)]);

        let c4 = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!(c4.edge_count(), 4);

        // extra whitespace is fine
        let same = parse_edge_list("  3   3 \n\n 0 1  1 2\n0   2\n").unwrap();
        assert_eq!(same, k3);
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(parse_edge_list(""), Err(EdgeListError::MissingHeader));
        assert_eq!(parse_edge_list("3"), Err(EdgeListError::MissingHeader));
        assert_eq!(
            parse_edge_list("3 2\n0 1"),
            Err(EdgeListError::EdgeCountMismatch { declared: 2, found: 2 })
        );
        assert_eq!(
            parse_edge_list("x 3"),
            Err(EdgeListError::BadToken("x".to_string()))
        );
        assert_eq!(
            parse_edge_list("3 1\n0 3"),
            Err(EdgeListError::Graph(GraphError::VertexOutOfRange { vertex: 3, n: 3 }))
        );
    }

    #[test]
    fn roundtrip_is_identity() {
        let g = parse_edge_list("5 5\n0 1\n0 2\n1 2\n0 3\n3 4").unwrap();
        let text = emit_edge_list(&g);
        assert_eq!(text, "5 5\n0 1\n0 2\n0 3\n1 2\n3 4\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }
}
