//! graph6 encoding, restricted to the single-byte size form (n <= 62).
//!
//! Bits are the upper triangle in column order `x(0,1), x(0,2), x(1,2),
//! x(0,3), ...`, packed big-endian six to a byte, zero padded, each byte
//! offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Graph6 { pos, msg: msg.into() }
}

/// Parses one graph6 string. A single trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (offset, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = body.as_bytes();
    if let Some(i) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(offset + i, format!("byte {:#04x} outside 63..126", bytes[i])));
    }
    let Some(&size) = bytes.first() else {
        return Err(err(offset, "empty input"));
    };
    if size == 126 {
        return Err(err(offset, "multi-byte size form (n > 62) is not supported"));
    }
    let n = (size - 63) as usize;
    if n == 0 {
        return Err(err(offset, "graph of order 0"));
    }
    debug_assert!(n <= MAX_ORDER);
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() < nbytes {
        return Err(err(offset + bytes.len(), format!("expected {nbytes} data bytes, found {}", data.len())));
    }
    if data.len() > nbytes {
        return Err(err(offset + 1 + nbytes, "trailing bytes after graph"));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    // padding must be zero for write(parse(s)) == s
    while k < nbytes * 6 {
        if (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
            return Err(err(offset + 1 + k / 6, "nonzero padding bits"));
        }
        k += 1;
    }
    Ok(g)
}

/// Encodes a graph as graph6 (no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
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

/// Parses a newline-separated list of graph6 strings, skipping blank lines.
/// Errors carry the 1-based line number in the message.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim_end()).map_err(|e| match e {
                Error::Graph6 { pos, msg } => Error::Graph6 { pos, msg: format!("line {}: {msg}", i + 1) },
                other => other,
            })
        })
        .collect()
}
