//! Bit-exact graph6 interchange (McKay's format).
//!
//! One graph per ASCII line: a size header, then the upper triangle of
//! the adjacency matrix in column-major order, packed six bits per
//! character with an offset of 63. Encoding is canonical for a labeled
//! graph, so `decode` followed by `encode` reproduces the input byte
//! for byte; padding bits must be zero and trailing bytes are rejected.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

/// Parse errors carry the byte offset of the offending character.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed size header at byte {offset}")]
    BadHeader { offset: usize },
    #[error("byte {byte:#04x} at offset {offset} outside the graph6 range 63..=126")]
    InvalidChar { offset: usize, byte: u8 },
    #[error("truncated bit stream: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data at byte {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("graph order {n} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge { n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn data_bytes(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes one graph6 line into a labeled graph.
pub fn decode_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidChar { offset, byte: b });
        }
    }

    // Size header: one byte for n <= 62, '~' + 3 bytes for n <= 258047,
    // '~~' + 6 bytes beyond that.
    let (n, body_start) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader { offset: bytes.len() });
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = n << 6 | (b - 63) as usize;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Graph6Error::BadHeader { offset: bytes.len() });
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = n << 6 | (b - 63) as usize;
        }
        (n, 8)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge { n });
    }

    let body = &bytes[body_start..];
    let expected = if n < 2 { 0 } else { data_bytes(n) };
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData {
            offset: body_start + expected,
        });
    }

    let mut g = Graph::empty(n)?;
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut bit = 0usize;
    'cols: for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6];
            if (byte - 63) >> (5 - bit % 6) & 1 == 1 {
                g.add_edge_mut(i, j);
            }
            bit += 1;
            if bit == total_bits {
                break 'cols;
            }
        }
    }
    // Remaining bits of the final byte must be zero padding.
    if total_bits % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - total_bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding {
                offset: body_start + expected - 1,
            });
        }
    }
    Ok(g)
}

/// Encodes a graph as its canonical graph6 line (no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // 128 <= 258047, so the 4-byte header always suffices here.
        out.push(126);
        out.push(63 + (n >> 12 & 0x3f) as u8);
        out.push(63 + (n >> 6 & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
