//! Plain-text edge-list format.
//!
//! ```text
//! # optional comment lines
//! N M
//! u v        (exactly M lines, 0 <= u < v < N)
//! ```
//!
//! Blank lines are ignored. The writer emits edges in lexicographic order.

use std::fmt::Write as _;

use crate::error::GraphError;
use crate::graph::Graph;

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), GraphError> {
    let err = |msg: &str| GraphError::Parse {
        line: lineno,
        msg: msg.to_string(),
    };
    let mut fields = line.split_whitespace();
    let a = fields.next().ok_or_else(|| err("expected two integers"))?;
    let b = fields.next().ok_or_else(|| err("expected two integers"))?;
    if fields.next().is_some() {
        return Err(err("trailing fields"));
    }
    let a = a
        .parse()
        .map_err(|_| err(&format!("not a non-negative integer: {a:?}")))?;
    let b = b
        .parse()
        .map_err(|_| err(&format!("not a non-negative integer: {b:?}")))?;
    Ok((a, b))
}

/// Parses and validates a graph.
pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(GraphError::Parse {
        line: 0,
        msg: "missing \"N M\" header".into(),
    })?;
    let (n, m) = parse_pair(header, header_line)?;

    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if edges.len() == m {
            return Err(GraphError::Parse {
                line: lineno,
                msg: format!("more than the declared {m} edges"),
            });
        }
        edges.push(parse_pair(line, lineno)?);
    }
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: text.lines().count(),
            msg: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(8 * (g.edge_count() + 1));
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
