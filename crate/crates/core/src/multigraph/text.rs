//! Line-oriented graph files.
//!
//! ```text
//! # comment
//! vertex v
//! terminal t1
//! edge 1 t1 v
//! ```
//!
//! `terminal` declares the vertex if needed. Edge endpoints must already be
//! declared and edge ids must be unique positive integers.

use super::{EdgeId, Multigraph, TerminalSet};
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt::Write;

pub fn parse_graph(input: &str) -> Result<(Multigraph, TerminalSet)> {
    let mut g = Multigraph::new();
    let mut terminals = BTreeSet::new();
    for (index, raw) in input.lines().enumerate() {
        let line = index + 1;
        let err = |message: String| Error::Parse { line, message };
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            ["vertex", name] => {
                g.add_vertex(name).map_err(|e| err(e.to_string()))?;
            }
            ["terminal", name] => {
                let v = match g.vertex_by_name(name) {
                    Ok(v) => v,
                    Err(_) => g.add_vertex(name).map_err(|e| err(e.to_string()))?,
                };
                if !terminals.insert(v) {
                    return Err(err(format!("duplicate terminal `{name}`")));
                }
            }
            ["edge", id, u, v] => {
                let id: u32 = id
                    .parse()
                    .ok()
                    .filter(|n| *n > 0)
                    .ok_or_else(|| err(format!("edge id `{id}` is not a positive integer")))?;
                let u = g.vertex_by_name(u).map_err(|e| err(e.to_string()))?;
                let v = g.vertex_by_name(v).map_err(|e| err(e.to_string()))?;
                g.add_edge(EdgeId(id), u, v).map_err(|e| err(e.to_string()))?;
            }
            [directive, ..] if ["vertex", "terminal", "edge"].contains(directive) => {
                return Err(err(format!("wrong number of arguments for `{directive}`")));
            }
            [directive, ..] => return Err(err(format!("unknown directive `{directive}`"))),
        }
    }
    let t = TerminalSet::new(&g, terminals)?;
    Ok((g, t))
}

pub fn write_graph(g: &Multigraph, t: &TerminalSet) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        let kind = if t.contains(v) { "terminal" } else { "vertex" };
        writeln!(out, "{kind} {}", g.name(v)).unwrap();
    }
    for (e, [a, b]) in g.edges() {
        writeln!(out, "edge {e} {} {}", g.name(a), g.name(b)).unwrap();
    }
    out
}
