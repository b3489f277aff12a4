//! Plain-text edge lists.
//!
//! Lines starting with `#` are comments. The first other line is `n m`,
//! followed by `m` lines `u v` of 0-based vertex indices.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim();
        if !trimmed.is_empty() && !trimmed.starts_with('#') {
            lines.push((offset, trimmed));
        }
        offset += line.len();
    }
    let mut it = lines.into_iter();
    let (hpos, header) = it.next().ok_or(Error::Parse { pos: text.len(), msg: "missing 'n m' header".into() })?;
    let [n, m] = pair(hpos, header)?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (pos, line) = it
            .next()
            .ok_or_else(|| Error::Parse { pos: text.len(), msg: format!("expected {m} edges, found {}", edges.len()) })?;
        let [u, v] = pair(pos, line)?;
        edges.push((u, v));
    }
    if let Some((pos, _)) = it.next() {
        return Err(Error::Parse { pos, msg: format!("more than {m} edge lines") });
    }
    Graph::from_edge_list(n, &edges)
}

fn pair(pos: usize, line: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse { pos, msg: format!("expected two integers, got '{line}'") });
    }
    let num = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse { pos, msg: format!("'{s}' is not a vertex index") });
    Ok([num(fields[0])?, num(fields[1])?])
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
