//! Text formats: graph6 and plain edge lists.
//!
//! Edge lists hold one `u v` pair per line (0-based, whitespace separated).
//! `#` starts a comment. An optional header line `n <order>` before the first
//! edge fixes the order; otherwise it is one more than the largest index seen.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::MAX_ORDER;

const GRAPH6_HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + 63) as char);
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
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |m: &str| Error::Graph6(m.to_string());
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if let Some(&c) = bytes.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(Error::Graph6(format!("byte {c:#04x} outside the printable range")));
    }
    let (n, body) = if bytes[0] != b'~' {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == b'~' {
            return Err(bad("unsupported or truncated order header"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &c| acc << 6 | (c - 63) as usize);
        (n, &bytes[4..])
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for order {n}, found {}",
            pairs.div_ceil(6),
            body.len()
        )));
    }
    let mut b = GraphBuilder::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                b.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(b.build())
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |m: String| Error::Parse { line: line_no, message: m };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "n" {
            if order.is_some() || !edges.is_empty() {
                return Err(err("header must appear once, before any edge".into()));
            }
            match fields[1..] {
                [v] => {
                    let n = v.parse::<usize>().map_err(|_| err(format!("bad order `{v}`")))?;
                    if n > MAX_ORDER {
                        return Err(Error::OrderTooLarge(n));
                    }
                    order = Some(n);
                }
                _ => return Err(err("malformed header, expected `n <order>`".into())),
            }
            continue;
        }
        let [a, b] = fields[..] else {
            return Err(err(format!("expected `u v`, found `{line}`")));
        };
        let u = a.parse::<usize>().map_err(|_| err(format!("bad vertex `{a}`")))?;
        let v = b.parse::<usize>().map_err(|_| err(format!("bad vertex `{b}`")))?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        edges.push((u, v));
    }
    let n = match order {
        Some(n) => n,
        None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    Graph::from_edges(n, edges)
}
