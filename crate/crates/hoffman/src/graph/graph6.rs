//! Parser and writer for the graph6 format, limited to the single-byte size
//! header (1 ≤ n ≤ 62). The upper triangle is encoded column by column,
//! x(0,1), x(0,2), x(1,2), x(0,3), ..., six bits per printable byte,
//! most significant bit first.

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 sizes above 62 are not supported")]
    UnsupportedSize,
    #[error("malformed graph6 header byte 0x{0:02x}")]
    MalformedHeader(u8),
    #[error("invalid graph6 data byte 0x{0:02x} at position {1}")]
    InvalidByte(u8, usize),
    #[error("expected {expected} data bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    TrailingBits,
}

fn data_len(n: usize) -> usize {
    (n * (n - 1) / 2 + 5) / 6
}

/// Parses a single graph6 line.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first == b'~' {
        // multi-byte size header for n > 62
        return Err(Graph6Error::UnsupportedSize);
    }
    if !(63..=125).contains(&first) {
        return Err(Graph6Error::MalformedHeader(first));
    }
    let n = (first - 63) as usize;
    let data = &bytes[1..];
    let expected = if n == 0 { 0 } else { data_len(n) };
    if data.len() != expected {
        return Err(Graph6Error::WrongLength { expected, found: data.len() });
    }

    let mut bits = Vec::with_capacity(expected * 6);
    for (pos, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte(b, pos + 1));
        }
        let value = b - 63;
        for shift in (0..6).rev() {
            bits.push((value >> shift) & 1 == 1);
        }
    }

    let mut adj = vec![false; n * n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                adj[i * n + j] = true;
                adj[j * n + i] = true;
            }
            idx += 1;
        }
    }
    if bits[idx..].iter().any(|&b| b) {
        return Err(Graph6Error::TrailingBits);
    }
    Ok(Graph::from_adjacency(n, adj))
}

/// Encodes a graph (n ≤ 62) as a graph6 line.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62, "graph6 writer limited to 62 vertices");
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push(63 + acc);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}
