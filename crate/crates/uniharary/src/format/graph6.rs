//! graph6 encoding of small undirected graphs.
//!
//! One header character carries the vertex count (`n + 63`, so `n <= 62`),
//! then the upper-triangle adjacency bits in column-major order
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed into 6-bit groups offset by 63.
//! Trailing padding bits must be zero.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 single-byte header supports at most 62 vertices, got {0}")]
    TooLarge(usize),
    #[error("multi-byte graph6 size headers are not supported")]
    UnsupportedHeader,
    #[error("byte {byte:#04x} at position {position} is outside the graph6 range 63..=126")]
    InvalidCharacter { position: usize, byte: u8 },
    #[error("expected {expected} data characters after the header, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("padding bits after the last adjacency bit must be zero")]
    NonZeroPadding,
}

fn data_char_count(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes a graph on at most 62 vertices.
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > 62 {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = vec![(n + 63) as u8];
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Decodes one graph6 string (surrounding whitespace tolerated).
pub fn parse_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.trim().as_bytes();
    let (&header, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if header == b'~' {
        return Err(Graph6Error::UnsupportedHeader);
    }
    if !(63..=126).contains(&header) {
        return Err(Graph6Error::InvalidCharacter { position: 0, byte: header });
    }
    let n = (header - 63) as usize;
    let expected = data_char_count(n);
    if data.len() != expected {
        return Err(Graph6Error::WrongLength { expected, got: data.len() });
    }
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidCharacter { position: i + 1, byte: b });
        }
    }
    let pair_count = n * n.saturating_sub(1) / 2;
    let bit = |idx: usize| (data[idx / 6] - 63) >> (5 - idx % 6) & 1;
    for idx in pair_count..expected * 6 {
        if bit(idx) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("triangle bits form a simple graph"))
}
