//! Text formats for graphs: graph6 (short form) and a headed edge list.
//!
//! The edge-list format is
//!
//! ```text
//! # comments start with '#'
//! n=4
//! 0 1
//! 2 3
//! ```
//!
//! The `n=` header is mandatory so isolated vertices survive a round trip.

use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};
use crate::graph::Graph;

/// Largest vertex count representable in graph6 short form.
pub const GRAPH6_MAX_VERTICES: usize = 62;

const G6_BIAS: u8 = 63;
const G6_MAX_CHAR: u8 = 126;

fn g6_err(offset: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parses one graph6 string. A single trailing newline is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&header) = bytes.first() else {
        return Err(g6_err(0, "empty input"));
    };
    if header == G6_MAX_CHAR {
        return Err(g6_err(0, "long-form header (n > 62) is not supported"));
    }
    if !(G6_BIAS..G6_MAX_CHAR).contains(&header) {
        return Err(g6_err(0, format!("invalid header byte 0x{header:02x}")));
    }
    let n = usize::from(header - G6_BIAS);
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);

    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if !(G6_BIAS..=G6_MAX_CHAR).contains(&b) {
            return Err(g6_err(i, format!("byte 0x{b:02x} outside 63..=126")));
        }
    }
    if bytes.len() < expected {
        return Err(g6_err(
            bytes.len(),
            format!("truncated edge field, expected {expected} bytes for n = {n}"),
        ));
    }
    if bytes.len() > expected {
        return Err(g6_err(expected, "trailing bytes after edge field"));
    }

    let bit = |k: usize| (bytes[1 + k / 6] - G6_BIAS) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.set_edge(u, v, true);
            }
            k += 1;
        }
    }
    for pad in bits..(expected - 1) * 6 {
        if bit(pad) {
            return Err(g6_err(1 + pad / 6, "non-zero padding bit"));
        }
    }
    Ok(g)
}

/// graph6 encoding (no trailing newline).
pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(GraphError::TooLarge {
            what: "graph6 short form",
            n,
            max: GRAPH6_MAX_VERTICES,
        });
    }
    let mut out = Vec::with_capacity(1 + (n * n / 2).div_ceil(6));
    out.push(G6_BIAS + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(G6_BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(G6_BIAS + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn el_err(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::EdgeList {
        line,
        reason: reason.into(),
    }
}

/// Parses the headed edge-list format. Line numbers in errors are 1-based.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| el_err(1, "missing \"n=<count>\" header"))?;
    let n: usize = header
        .strip_prefix("n=")
        .ok_or_else(|| el_err(hline, "missing \"n=<count>\" header"))?
        .trim()
        .parse()
        .map_err(|e| el_err(hline, format!("bad vertex count: {e}")))?;

    let mut g = Graph::empty(n);
    for (line, l) in lines {
        let mut parts = l.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(el_err(line, "expected two vertex indices \"u v\""));
        };
        let parse = |s: &str| -> Result<usize, ParseError> {
            s.parse()
                .map_err(|e| el_err(line, format!("bad vertex {s:?}: {e}")))
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u >= n || v >= n {
            return Err(el_err(
                line,
                format!("vertex {} out of range for n = {n}", u.max(v)),
            ));
        }
        if u == v {
            return Err(el_err(line, format!("self-loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(el_err(
                line,
                format!("duplicate edge {{{},{}}}", u.min(v), u.max(v)),
            ));
        }
        g.set_edge(u, v, true);
    }
    Ok(g)
}

/// Edge-list serialization: header then one `u v` line per edge, `u < v`,
/// lexicographic.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}
