//! graph6 text encoding, plus a plain edge-list reader.
//!
//! graph6 packs the upper triangle of the adjacency matrix in colex order
//! ((0,1), (0,2), (1,2), (0,3), ...) into 6-bit groups offset by 63. Vertex
//! counts up to 62 use a single header byte `n + 63`; larger counts use the
//! long form `~` + three 6-bit digits, which this module caps at 64.

use crate::graph::{mask_n, Graph, MAX_VERTICES};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphParseError {
    Empty,
    /// Header decoded to a vertex count outside `1..=64`.
    UnsupportedOrder(usize),
    /// Byte outside the printable graph6 range 63..=126.
    InvalidByte { position: usize, byte: u8 },
    /// Fewer data bytes than the vertex count requires.
    Truncated { expected: usize, got: usize },
    /// More data bytes than the vertex count allows.
    TrailingData { expected: usize, got: usize },
    /// Padding bits after the last pair were not zero.
    NonzeroPadding,
    /// Edge-list token that is not a vertex index.
    BadEdgeToken(String),
    /// Edge-list line with a vertex out of range or a loop.
    BadEdge(String),
}

impl fmt::Display for GraphParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphParseError::Empty => write!(f, "empty graph text"),
            GraphParseError::UnsupportedOrder(n) => {
                write!(f, "vertex count {n} outside supported range 1..={MAX_VERTICES}")
            }
            GraphParseError::InvalidByte { position, byte } => {
                write!(f, "byte {byte:#04x} at offset {position} is not valid graph6")
            }
            GraphParseError::Truncated { expected, got } => {
                write!(f, "graph6 body truncated: expected {expected} data bytes, got {got}")
            }
            GraphParseError::TrailingData { expected, got } => {
                write!(f, "trailing data after graph6 body: expected {expected} data bytes, got {got}")
            }
            GraphParseError::NonzeroPadding => write!(f, "nonzero padding bits in final graph6 byte"),
            GraphParseError::BadEdgeToken(t) => write!(f, "edge list token {t:?} is not a vertex index"),
            GraphParseError::BadEdge(l) => write!(f, "bad edge list line {l:?}"),
        }
    }
}

impl std::error::Error for GraphParseError {}

/// Decodes one graph6 string (surrounding ASCII whitespace tolerated).
pub fn parse_graph6(text: &str) -> Result<Graph, GraphParseError> {
    let bytes = text.trim().as_bytes();
    if bytes.is_empty() {
        return Err(GraphParseError::Empty);
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphParseError::InvalidByte { position: i, byte: b });
        }
    }
    let (n, body) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            // 8-byte header, n >= 258048: far beyond the 64-vertex ceiling
            return Err(GraphParseError::UnsupportedOrder(258048));
        }
        if bytes.len() < 4 {
            return Err(GraphParseError::Truncated { expected: 4, got: bytes.len() });
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if !(1..=MAX_VERTICES).contains(&n) {
        return Err(GraphParseError::UnsupportedOrder(n));
    }
    let pairs = n * (n - 1) / 2;
    let need = pairs.div_ceil(6);
    if body.len() < need {
        return Err(GraphParseError::Truncated { expected: need, got: body.len() });
    }
    if body.len() > need {
        return Err(GraphParseError::TrailingData { expected: need, got: body.len() });
    }
    let mut g = Graph::empty(n);
    let mut idx = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = (body[idx / 6] - 63) as u64;
            if byte >> (5 - idx % 6) & 1 == 1 {
                g.set_edge(u, v, true);
            }
            idx += 1;
        }
    }
    // remaining bits of the final byte must be zero
    if need > 0 {
        let last = (body[need - 1] - 63) as u64;
        let used = pairs - (need - 1) * 6;
        if last & mask_n(6) >> used != 0 {
            return Err(GraphParseError::NonzeroPadding);
        }
    }
    Ok(g)
}

/// Encodes a graph as graph6. Inverse of [`parse_graph6`].
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push((n >> 12 & 0x3f) as u8 + 63);
        out.push((n >> 6 & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let pairs = n * (n - 1) / 2;
    let mut acc = 0u8;
    let mut filled = 0usize;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    debug_assert_eq!(out.len(), if n <= 62 { 1 } else { 4 } + pairs.div_ceil(6));
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses either supported text form. A first data line made only of integer
/// tokens selects the edge list; anything else is treated as graph6 (whose
/// bytes all sit above the ASCII digits, so the sniff cannot misfire).
pub fn parse_graph_text(text: &str) -> Result<Graph, GraphParseError> {
    let Some(line) = text
        .lines()
        .map(str::trim)
        .find(|line| !line.is_empty() && !line.starts_with('#'))
    else {
        return Err(GraphParseError::Empty);
    };
    let numeric = line
        .split_whitespace()
        .all(|tok| tok.bytes().all(|b| b.is_ascii_digit()));
    if numeric {
        parse_edge_list(text)
    } else {
        parse_graph6(line)
    }
}

/// Reads a whitespace-separated edge list: one `u v` pair per line, vertices
/// 0-based. Blank lines and lines starting with `#` are skipped. A line with
/// a single integer declares the vertex count (otherwise it is one more than
/// the largest endpoint seen).
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphParseError> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut declared: Option<usize> = None;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| GraphParseError::BadEdgeToken(t.to_string()))
        };
        match toks.as_slice() {
            [n] => declared = Some(parse(n)?),
            [u, v] => {
                let (u, v) = (parse(u)?, parse(v)?);
                if u == v {
                    return Err(GraphParseError::BadEdge(line.to_string()));
                }
                edges.push((u, v));
            }
            _ => return Err(GraphParseError::BadEdge(line.to_string())),
        }
    }
    let seen = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(seen).max(seen);
    if !(1..=MAX_VERTICES).contains(&n) {
        return Err(GraphParseError::UnsupportedOrder(n));
    }
    let mut g = Graph::empty(n);
    for (u, v) in edges {
        g.set_edge(u, v, true);
    }
    Ok(g)
}

// =============================================================================
// Tests
// =============================================================================
