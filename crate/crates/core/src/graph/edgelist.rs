//! Plain edge-list text format: a `graph <n>` line followed by one `u v`
//! line per edge (0-indexed, `u < v`). Used for graphs too large for graph6
//! to be convenient, such as big blow-ups.

use std::fmt::Write as _;

use super::{Graph, GraphBuilder, GraphError};

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

pub fn decode_edge_list(text: &str) -> Result<Graph, GraphError> {
    let bad = |line: usize, msg: &str| GraphError::EdgeList {
        line,
        msg: msg.to_string(),
    };
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| bad(1, "missing header"))?;
    let n: usize = header
        .trim()
        .strip_prefix("graph ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| bad(1, "expected `graph <n>`"))?;
    let mut b = GraphBuilder::new(n)?;
    for (idx, line) in lines {
        let lineno = idx + 1;
        let mut it = line.split_whitespace();
        let (Some(a), Some(c), None) = (it.next(), it.next(), it.next()) else {
            return Err(bad(lineno, "expected `u v`"));
        };
        let (u, v): (usize, usize) = match (a.parse(), c.parse()) {
            (Ok(u), Ok(v)) => (u, v),
            _ => return Err(bad(lineno, "vertex labels must be integers")),
        };
        if u >= v {
            return Err(bad(lineno, "pairs must satisfy u < v"));
        }
        if v >= n {
            return Err(bad(lineno, "vertex out of range"));
        }
        if b.has_edge(u, v)? {
            return Err(bad(lineno, "duplicate edge"));
        }
        b.add_edge(u, v)?;
    }
    Ok(b.build())
}
