//! graph6 encoding and decoding (McKay's dense ASCII format).
//!
//! Supports orders up to 258047 (one- and four-byte size prefixes). The
//! serializer always emits canonical bytes: upper triangle in column order,
//! zero padding, no header.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const OFFSET: u8 = 63;
const MAX_N: usize = 258_047;

/// Decode a graph6 string (optionally prefixed by `>>graph6<<`).
pub fn parse_graph6(input: &str) -> Result<Graph> {
    let s = input.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(OFFSET..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} out of the printable range 63..=126")));
    }
    let (n, body) = decode_order(bytes)?;
    let pairs = n * n.saturating_sub(1) / 2;
    let groups = pairs.div_ceil(6);
    if body.len() != groups {
        return Err(Error::Graph6(format!(
            "order {n} needs {groups} data bytes, found {}",
            body.len()
        )));
    }
    let mut g = Graph::new(n);
    let mut bit_index = 0usize;
    for (v, u) in column_pairs(n) {
        let byte = body[bit_index / 6] - OFFSET;
        let bit = byte >> (5 - bit_index % 6) & 1;
        if bit == 1 {
            g.set_edge(u, v, true);
        }
        bit_index += 1;
    }
    // Padding bits must be zero for the encoding to be canonical.
    if pairs % 6 != 0 {
        let last = body[groups - 1] - OFFSET;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Encode a graph as canonical graph6 bytes.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_N {
        return Err(Error::OrderTooLarge { n, max: MAX_N });
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        out.push((n >> 12) as u8 + OFFSET);
        out.push((n >> 6 & 63) as u8 + OFFSET);
        out.push((n & 63) as u8 + OFFSET);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for (v, u) in column_pairs(n) {
        acc = acc << 1 | u8::from(g.has_edge(u, v));
        filled += 1;
        if filled == 6 {
            out.push(acc + OFFSET);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("printable ASCII by construction"))
}

/// Upper-triangle pairs `(v, u)` with `u < v`, in column order:
/// (1,0), (2,0), (2,1), (3,0), ...
fn column_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |v| (0..v).map(move |u| (v, u)))
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - OFFSET) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(Error::Graph6("orders above 258047 are not supported".into()));
    }
    if bytes.len() < 4 {
        return Err(Error::Graph6("truncated multi-byte order prefix".into()));
    }
    let n = ((bytes[1] - OFFSET) as usize) << 12
        | ((bytes[2] - OFFSET) as usize) << 6
        | (bytes[3] - OFFSET) as usize;
    if n < 63 {
        return Err(Error::Graph6("non-canonical multi-byte order prefix".into()));
    }
    Ok((n, &bytes[4..]))
}
