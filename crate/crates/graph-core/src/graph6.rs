//! graph6 serialization, 1-byte size form only (n <= 62).
//!
//! Layout per the published format: a header byte `n + 63`, then the upper
//! triangle of the adjacency matrix in column order (bit (i, j) for
//! j = 1..n, i = 0..j), packed big-endian into 6-bit groups, each group
//! offset by 63 into the printable range.

use crate::{Graph, Graph6Error};

/// Largest order representable in the 1-byte size form.
pub const GRAPH6_MAX_ORDER: usize = 62;

/// Parses one graph6 line (without trailing newline).
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let &header = bytes.first().ok_or(Graph6Error::Empty)?;
    if header == b'~' {
        // Multi-byte size form; out of scope by design.
        return Err(Graph6Error::UnsupportedSize { n: 63 });
    }
    if !(63..=126).contains(&header) {
        return Err(Graph6Error::MalformedHeader { byte: header });
    }
    let n = (header - 63) as usize;
    let nbits = n * (n.saturating_sub(1)) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < expected {
        return Err(Graph6Error::TruncatedBody {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage {
            found: body.len() - expected,
        });
    }
    let mut g = Graph::empty(n);
    let mut bit_idx = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[bit_idx / 6];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::InvalidByte {
                    pos: 1 + bit_idx / 6,
                    byte,
                });
            }
            let group = byte - 63;
            if group >> (5 - bit_idx % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            bit_idx += 1;
            if bit_idx == nbits {
                break 'outer;
            }
        }
    }
    // Validate any body bytes beyond the last consumed bit plus the padding.
    if expected > 0 {
        let last = body[expected - 1];
        if !(63..=126).contains(&last) {
            return Err(Graph6Error::InvalidByte {
                pos: expected,
                byte: last,
            });
        }
        let used = nbits - (expected - 1) * 6;
        let pad_mask = (1u8 << (6 - used)) - 1;
        if (last - 63) & pad_mask != 0 {
            return Err(Graph6Error::DirtyPadding);
        }
    }
    Ok(g)
}

/// Emits the graph6 line for `g` (no trailing newline).
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::UnsupportedSize { n });
    }
    let mut out = vec![n as u8 + 63];
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
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
    Ok(String::from_utf8(out).unwrap())
}
