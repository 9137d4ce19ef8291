//! graph6 encoding.
//!
//! Each byte carries six bits as `63 + value`. The text starts with the
//! vertex count `N(n)` (one byte for `n <= 62`, or `~` followed by three
//! bytes for `n <= 258047`) and continues with the upper triangle of the
//! adjacency matrix in column order `x(0,1) x(0,2) x(1,2) x(0,3) ...`,
//! zero-padded to a multiple of six bits.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with the one- and four-byte size headers.
pub const MAX_ORDER: usize = 258_047;

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

/// Position of the pair `(i, j)`, `i < j`, in the column-major bit order.
#[inline]
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Pairs `(i, j)` in column-major bit order.
pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte {b} outside printable range 63..126")));
        }
    }
    let (n, header_len) = match body {
        [] => return Err(err(base, "missing size header")),
        [126, 126, ..] => return Err(err(base + 1, "eight-byte size header not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(base + 1 + rest.len(), "truncated four-byte size header"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() != need {
        return Err(err(
            base + header_len + data.len().min(need),
            format!("expected {need} adjacency bytes for n = {n}, found {}", data.len()),
        ));
    }

    let mut edges = Vec::new();
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for (k, (i, j)) in pairs(n).enumerate() {
        if bit(k) {
            edges.push((i, j));
        }
    }
    for k in nbits..need * 6 {
        if bit(k) {
            return Err(err(base + header_len + k / 6, "nonzero padding bits"));
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::TooManyVertices(n));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u8; nbits.div_ceil(6)];
    for &(i, j) in g.edges() {
        let k = pair_index(i, j);
        bits[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(bits.into_iter().map(|b| b + 63));
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
