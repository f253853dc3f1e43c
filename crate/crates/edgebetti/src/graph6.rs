//! The graph6 text format for undirected graphs.
//!
//! One graph per line: a header encoding the vertex count, then the upper
//! triangle of the adjacency matrix read column by column (x_{0,1}, x_{0,2},
//! x_{1,2}, x_{0,3}, ...), packed into 6-bit groups MSB first, each group
//! offset by 63 into printable ASCII. Graphs on up to 62 vertices use a
//! single header byte; 63 and 64 need the `~` long form.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty line".into()));
    }
    let (n, body) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Error::Capacity("graph6 long-long header (n >= 258048)".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated extended header".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = n << 6 | group_value(b)? as usize;
        }
        (n, &bytes[4..])
    } else {
        (group_value(bytes[0])? as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity(format!("graph6 input has {n} vertices")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    if body.len() != want {
        return Err(Error::Graph6(format!(
            "expected {want} body bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            let grp = group_value(body[idx / 6])?;
            if grp >> (5 - idx % 6) & 1 == 1 {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    if idx % 6 != 0 {
        let grp = group_value(body[idx / 6])?;
        if grp & ((1 << (6 - idx % 6)) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::from_edges(n, &edges)
}

fn group_value(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::Graph6(format!("byte {b:#04x} out of graph6 range")))
    }
}

/// Decode every nonempty line, tagging failures with their line number.
pub fn decode_lines(input: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        out.push(decode(line).map_err(|e| {
            Error::Graph6(format!("line {}: {e}", i + 1))
        })?);
    }
    Ok(out)
}
