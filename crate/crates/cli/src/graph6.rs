//! The graph6 format for graphs on at most 62 vertices.
//!
//! One graph per line: a byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), …`),
//! packed six bits per byte, each byte offset by 63.

use strong_alliance::{Graph, GraphError};

pub const MAX_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid graph6 byte {0:#04x}")]
    InvalidByte(u8),
    #[error("graph6 orders above {MAX_ORDER} are not supported")]
    TooLarge,
    #[error("graph6 string for {n} vertices should have {expected} data bytes, found {found}")]
    Length { n: usize, expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\r', '\n']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Graph6Error::InvalidByte(b));
    }
    if first == 126 {
        return Err(Graph6Error::TooLarge);
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::Length {
            n,
            expected,
            found: data.len(),
        });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, &edges)?)
}

/// Decodes every non-empty line.
pub fn decode_all(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && *l != HEADER)
        .map(decode)
        .collect()
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge);
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}
