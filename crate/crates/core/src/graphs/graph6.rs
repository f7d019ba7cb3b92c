//! graph6 interchange format (n <= 62).

use thiserror::Error;

use super::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 strings with n > 62 are not supported")]
    TooLarge,
    #[error("invalid graph6 byte {0:#x}")]
    InvalidByte(u8),
    #[error("graph6 string too short for its vertex count")]
    Truncated,
}

/// Encodes a graph in graph6 format. Upper-triangle bits are emitted column
/// by column, as the format specifies.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertices();
    if n > 62 {
        return Err(Graph6Error::TooLarge);
    }
    let mut out = vec![n as u8 + 63];
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - i);
            }
        }
        out.push(byte + 63);
    }
    Ok(String::from_utf8(out).expect("printable ascii"))
}

/// Decodes a graph6 string (n <= 62).
pub fn from_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.trim().as_bytes();
    let (&first, rest) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if first == 126 {
        return Err(Graph6Error::TooLarge);
    }
    if !(63..=125).contains(&first) {
        return Err(Graph6Error::InvalidByte(first));
    }
    let n = (first - 63) as usize;
    let mut g = Graph::new(n, format!("graph6({s})"));
    let needed = (n * n.saturating_sub(1) / 2 + 5) / 6;
    if rest.len() < needed {
        return Err(Graph6Error::Truncated);
    }
    let mut bit_index = 0usize;
    let bit = |i: usize| -> Result<bool, Graph6Error> {
        let byte = rest[i / 6];
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte(byte));
        }
        Ok((byte - 63) >> (5 - i % 6) & 1 == 1)
    };
    for v in 1..n {
        for u in 0..v {
            if bit(bit_index)? {
                g.set_edge(u, v);
            }
            bit_index += 1;
        }
    }
    Ok(g)
}
