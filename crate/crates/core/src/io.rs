//! Text formats: a plain edge list and graph6.
//!
//! Edge list: the first non-blank line holds the order `n`, each following
//! non-blank line one 0-based edge `u v`.
//!
//! graph6: `N(n)` followed by the upper triangle of the adjacency matrix,
//! column by column, packed into 6-bit groups offset by 63. An optional
//! `>>graph6<<` header is accepted on input.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing vertex count"))?;
    let n: usize = header.parse().map_err(|_| parse_err(hline, format!("malformed vertex count {header:?}")))?;
    let mut g = Graph::empty(n).map_err(|e| parse_err(hline, e.to_string()))?;
    for (line, l) in lines {
        let mut fields = l.split_whitespace();
        let mut vertex = || -> Result<usize> {
            let f = fields.next().ok_or_else(|| parse_err(line, "expected two vertices"))?;
            f.parse().map_err(|_| parse_err(line, format!("malformed vertex {f:?}")))
        };
        let (u, v) = (vertex()?, vertex()?);
        if fields.next().is_some() {
            return Err(parse_err(line, "trailing fields"));
        }
        g.insert_edge(u, v).map_err(|e| parse_err(line, e.to_string()))?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(parse_err(1, format!("invalid graph6 byte at offset {pos}")));
    }
    let (n, body) = match bytes {
        [] => return Err(parse_err(1, "empty graph6 string")),
        [126, 126, ..] => return Err(parse_err(1, format!("graph6 order exceeds {MAX_ORDER}"))),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(parse_err(1, "truncated graph6 order")),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    if n == 0 || n > MAX_ORDER {
        return Err(parse_err(1, format!("graph6 order {n} outside 1..={MAX_ORDER}")));
    }
    let total = n * (n - 1) / 2;
    let expected = total.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(1, format!("graph6 body has {} bytes, expected {expected}", body.len())));
    }
    let mut g = Graph::empty(n)?;
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[t / 6] - 63;
            if byte >> (5 - t % 6) & 1 == 1 {
                g.insert_edge(i, j)?;
            }
            t += 1;
        }
    }
    if total % 6 != 0 {
        let pad = body[expected - 1] - 63;
        if pad & ((1 << (6 - total % 6)) - 1) != 0 {
            return Err(parse_err(1, "nonzero graph6 padding bits"));
        }
    }
    Ok(g)
}

/// Parses either format. Edge lists start with a decimal digit, which is never
/// a valid graph6 byte. Several graph6 lines yield several graphs.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with(|c: char| c.is_ascii_digit()) {
        return Ok(vec![from_edge_list(text)?]);
    }
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        graphs.push(from_graph6(line).map_err(|e| match e {
            Error::Parse { message, .. } => parse_err(i + 1, message),
            other => other,
        })?);
    }
    if graphs.is_empty() {
        return Err(parse_err(1, "no graph found in input"));
    }
    Ok(graphs)
}
