//! graph6 encoding and decoding.
//!
//! Layout: a size prefix (one byte `n + 63` for `n <= 62`, otherwise `~`
//! followed by three 6-bit groups), then the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed
//! big-endian into 6-bit groups, zero-padded, each group offset by 63.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Largest order representable by the short and 4-byte size forms.
pub const MAX_ORDER: usize = 258_047;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("graph order {0} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge(usize),
    #[error("empty graph6 string")]
    Empty,
    #[error("character {found:?} at position {position} is outside the graph6 range '?'..='~'")]
    BadCharacter { position: usize, found: char },
    #[error("malformed size prefix: {0}")]
    BadSize(&'static str),
    #[error(
        "truncated edge data: expected {expected} characters after the size prefix, found {found}"
    )]
    Truncated { expected: usize, found: usize },
    #[error("{extra} unexpected trailing characters after the edge data")]
    Trailing { extra: usize },
    #[error("nonzero padding bits in the final group")]
    NonzeroPadding,
}

/// Encodes `g` with the shortest legal size form and no header.
pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + bits.div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        let row = g.neighbors(v);
        for u in 0..v {
            group = group << 1 | row.contains(u) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are tolerated.
pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (position, c) in s.chars().enumerate() {
        if !('?'..='~').contains(&c) {
            return Err(Graph6Error::BadCharacter { position, found: c });
        }
    }

    let (n, body) = if bytes[0] != b'~' {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.get(1) == Some(&b'~') {
            return Err(Graph6Error::BadSize(
                "8-byte size form exceeds the supported maximum order",
            ));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadSize("4-byte size form is truncated"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n <= 62 {
            return Err(Graph6Error::BadSize(
                "4-byte size form used for an order below 63",
            ));
        }
        (n, &bytes[4..])
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::Trailing {
            extra: body.len() - expected,
        });
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding);
    }

    let mut rows = vec![VertexSet::new(n); n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let group = body[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                rows[u].insert(v);
                rows[v].insert(u);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(rows))
}

/// Decodes a newline-delimited stream, skipping blank lines. Errors carry
/// the 1-based line number.
pub fn read_all<R: BufRead>(reader: R) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    let mut graphs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|_| (i + 1, Graph6Error::Empty))?;
        if line.trim().is_empty() {
            continue;
        }
        graphs.push(decode(&line).map_err(|e| (i + 1, e))?);
    }
    Ok(graphs)
}
