//! graph6 and plain edge-list encodings.
//!
//! graph6: the order as one byte `63 + n` (n <= 62) or as `~` followed by
//! three 6-bit bytes (n < 2^18), then the upper triangle read column by
//! column (`(0,1), (0,2), (1,2), (0,3), ...`) packed six bits per byte,
//! most significant bit first, each byte offset by 63.
//!
//! Edge list: a header line `order edge_count`, then one `u v` line per
//! edge, 0-indexed and whitespace separated. Blank lines are ignored.

use thiserror::Error;

use super::{Graph, GraphError};

/// Largest order the four-byte graph6 header can carry.
pub const GRAPH6_MAX_ORDER: usize = (1 << 18) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte offset {offset}: {found:#04x} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, found: u8 },
    #[error("byte offset {offset}: line truncated, expected {expected} bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("byte offset {offset}: {extra} unexpected trailing bytes")]
    TrailingBytes { offset: usize, extra: usize },
    #[error("byte offset {offset}: orders of 2^18 and above are not supported")]
    OrderUnsupported { offset: usize },
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn sextet(bytes: &[u8], offset: usize, expected: usize) -> Result<u8, DecodeError> {
    match bytes.get(offset) {
        None => Err(DecodeError::Truncated { offset, expected }),
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(DecodeError::BadByte { offset, found: b }),
    }
}

fn triangle_bytes(order: usize) -> usize {
    (order * order.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A trailing newline (or CR/LF) is tolerated, as
/// is the optional `>>graph6<<` header.
pub fn read_graph6(line: &str) -> Result<Graph, DecodeError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(DecodeError::Empty);
    }
    let (order, start) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(DecodeError::OrderUnsupported { offset: 1 });
        }
        let mut n = 0usize;
        for offset in 1..4 {
            n = (n << 6) | sextet(bytes, offset, 4)? as usize;
        }
        (n, 4)
    } else {
        (sextet(bytes, 0, 1)? as usize, 1)
    };
    let expected = start + triangle_bytes(order);
    // validate every byte before interpreting the bitstream
    for offset in start..expected {
        sextet(bytes, offset, expected)?;
    }
    if bytes.len() > expected {
        return Err(DecodeError::TrailingBytes {
            offset: expected,
            extra: bytes.len() - expected,
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for v in 1..order {
        for u in 0..v {
            let byte = bytes[start + bit / 6] - 63;
            if byte & (0b10_0000 >> (bit % 6)) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Ok(Graph::from_unsorted(order, edges))
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(GraphError::OrderTooLarge {
            order: n,
            limit: GRAPH6_MAX_ORDER,
        });
    }
    let mut out = Vec::with_capacity(4 + triangle_bytes(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut bits = vec![0u8; triangle_bytes(n)];
    for &(u, v) in g.edges() {
        let bit = v * (v - 1) / 2 + u;
        bits[bit / 6] |= 0b10_0000 >> (bit % 6);
    }
    out.extend(bits.into_iter().map(|b| b + 63));
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn parse_field(tok: Option<&str>, line: usize, what: &str) -> Result<usize, DecodeError> {
    let tok = tok.ok_or_else(|| DecodeError::EdgeList {
        line,
        message: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| DecodeError::EdgeList {
        line,
        message: format!("{what} {tok:?} is not a non-negative integer"),
    })
}

pub fn read_edge_list(text: &str) -> Result<Graph, DecodeError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(DecodeError::EdgeList {
        line: 1,
        message: "missing header \"order edge_count\"".into(),
    })?;
    let mut toks = header.split_whitespace();
    let order = parse_field(toks.next(), hline, "order")?;
    let declared = parse_field(toks.next(), hline, "edge count")?;
    if toks.next().is_some() {
        return Err(DecodeError::EdgeList {
            line: hline,
            message: "header has more than two fields".into(),
        });
    }
    let mut pairs = Vec::with_capacity(declared);
    for (lineno, line) in lines {
        let mut toks = line.split_whitespace();
        let u = parse_field(toks.next(), lineno, "endpoint")?;
        let v = parse_field(toks.next(), lineno, "endpoint")?;
        if toks.next().is_some() {
            return Err(DecodeError::EdgeList {
                line: lineno,
                message: "edge line has more than two fields".into(),
            });
        }
        pairs.push((u, v));
    }
    if pairs.len() != declared {
        return Err(DecodeError::EdgeCount {
            declared,
            found: pairs.len(),
        });
    }
    Ok(Graph::new(order, pairs)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
