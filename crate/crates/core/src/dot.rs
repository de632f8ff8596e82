//! Graphviz DOT export.

use std::fmt::Write as _;

use crate::cover::{verify_cover, CoverCheck, CoverError, CutCover};
use crate::digraph::Digraph;

/// Renders `d` as a DOT digraph. With a cover, each edge is labeled with the
/// lowest (1-based) cut containing it; a cover that fails verification is an
/// error.
pub fn export_dot(d: &Digraph, cover: Option<&CutCover>) -> Result<String, CoverError> {
    if let Some(c) = cover {
        if let CoverCheck::Uncovered(edges) = verify_cover(d, c)? {
            return Err(CoverError::Unverified(edges));
        }
    }
    let mut s = String::from("digraph G {\n");
    for v in d.vertices() {
        writeln!(s, "  {v};").unwrap();
    }
    for (u, v) in d.edges() {
        match cover.and_then(|c| c.covering_cut(u, v)) {
            Some(i) => writeln!(s, "  {u} -> {v} [label=\"{}\"];", i + 1).unwrap(),
            None => writeln!(s, "  {u} -> {v};").unwrap(),
        }
    }
    s.push_str("}\n");
    Ok(s)
}
