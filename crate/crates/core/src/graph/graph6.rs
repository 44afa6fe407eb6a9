//! McKay's graph6 format.
//!
//! A line is a size prefix followed by the upper triangle of the adjacency
//! matrix in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), packed
//! six bits per byte, most significant bit first, each byte offset by 63.

use std::io::BufRead;

use super::Graph;
use crate::error::{Error, Result};

/// Largest order representable with the four-byte size prefix.
pub const MAX_VERTICES: usize = 258_047;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse { offset, reason: reason.into() }
}

/// Decodes one graph6 line (without its line terminator).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(0, "missing size prefix"));
    }
    if let Some(i) = bytes.iter().position(|b| !(OFFSET..=126).contains(b)) {
        return Err(parse_err(i, format!("byte {:#04x} outside the graph6 range", bytes[i])));
    }
    let value = |range: std::ops::Range<usize>| -> Result<usize> {
        let chunk = bytes.get(range.clone()).ok_or_else(|| parse_err(bytes.len(), "truncated size prefix"))?;
        Ok(chunk.iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - OFFSET)))
    };
    let (n, header_len) = match (bytes[0], bytes.get(1)) {
        (126, Some(126)) => (value(2..8)?, 8),
        (126, _) => (value(1..4)?, 4),
        (b, _) => (usize::from(b - OFFSET), 1),
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::UnsupportedSize(n));
    }

    let bits = n * (n - 1) / 2;
    let body_len = bits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < body_len {
        return Err(parse_err(bytes.len(), format!("expected {body_len} data bytes, found {}", body.len())));
    }
    if body.len() > body_len {
        return Err(parse_err(header_len + body_len, "trailing data after adjacency bits"));
    }

    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    if body_len > 0 {
        let last = body[body_len - 1] - OFFSET;
        let pad = body_len * 6 - bits;
        if last & ((1 << pad) - 1) != 0 {
            return Err(parse_err(header_len + body_len - 1, "non-zero padding bits"));
        }
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes `g` as a graph6 line (without a line terminator).
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12 + 1);
    match n {
        0..=62 => out.push(OFFSET + n as u8),
        63..=MAX_VERTICES => {
            out.push(126);
            out.extend([12, 6, 0].map(|s| OFFSET + ((n >> s) & 63) as u8));
        }
        _ => return Err(Error::UnsupportedSize(n)),
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// Decodes a graph6 stream: one graph per line, blank lines skipped, an
/// optional `>>graph6<<` header tolerated. Each item carries its 1-based
/// line number so callers can report errors and keep going.
pub fn read_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = (usize, Result<Graph>)> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some((i + 1, Err(parse_err(0, format!("read failed: {e}"))))),
        };
        let trimmed = line.trim_end_matches(['\r', '\n']);
        let trimmed = trimmed.strip_prefix(HEADER).unwrap_or(trimmed);
        if trimmed.is_empty() {
            None
        } else {
            Some((i + 1, parse_graph6(trimmed)))
        }
    })
}
