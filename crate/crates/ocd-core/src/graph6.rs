//! graph6 encoding and decoding, short size form only (n <= 62).
//!
//! The format stores the upper adjacency triangle column by column —
//! (0,1), (0,2), (1,2), (0,3), ... — packed six bits per byte, most
//! significant bit first, with every byte offset by 63 to stay printable.

use thiserror::Error;

use crate::graph::Graph;

/// Short-form size field covers 0..=62; we additionally reject n = 0.
pub const GRAPH6_MAX_VERTICES: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("byte {byte:#04x} at position {index} outside the graph6 range 63..=126")]
    InvalidByte { index: usize, byte: u8 },
    #[error("long size forms (n > 62) are not supported")]
    LongSizeForm,
    #[error("graph6 string for n={n} needs {expected} triangle bytes, found only {found}")]
    Truncated { n: usize, expected: usize, found: usize },
    #[error("trailing garbage: {extra} bytes past the adjacency triangle")]
    TrailingGarbage { extra: usize },
    #[error("padding bits after the adjacency triangle must be zero")]
    NonZeroPadding,
    #[error("the null graph (n = 0) is not supported")]
    NullGraph,
    #[error("{n} vertices exceed the graph6 short-form maximum of {GRAPH6_MAX_VERTICES}")]
    TooManyVertices { n: usize },
}

/// Number of bytes holding the n(n-1)/2 triangle bits.
fn triangle_bytes(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Encodes a graph as a graph6 string.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices { n });
    }
    let mut out = String::with_capacity(1 + triangle_bytes(n));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        out.push((acc + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 string; a trailing newline is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (index, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { index, byte });
        }
    }
    if bytes[0] == 126 {
        return Err(Graph6Error::LongSizeForm);
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::NullGraph);
    }
    let expected = triangle_bytes(n);
    let found = bytes.len() - 1;
    if found < expected {
        return Err(Graph6Error::Truncated { n, expected, found });
    }
    if found > expected {
        return Err(Graph6Error::TrailingGarbage {
            extra: found - expected,
        });
    }

    let mut edges = Vec::new();
    let mut cursor = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + cursor / 6] - 63;
            if byte >> (5 - cursor % 6) & 1 == 1 {
                edges.push((i, j));
            }
            cursor += 1;
        }
    }
    if !cursor.is_multiple_of(6) {
        let pad = 6 - cursor % 6;
        let last = bytes[bytes.len() - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }

    Ok(Graph::from_edges(n, edges).expect("decoded indices are in range"))
}
