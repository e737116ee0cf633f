use std::fmt::Write;

use crate::multigraph::{EdgeSet, Multigraph, TerminalSet};
use crate::packing::PackingCertificate;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz source with terminals filled and, given a certificate, cut edges
/// drawn bold red and path edges labelled by path index.
pub fn to_dot(g: &Multigraph, t: &TerminalSet, cert: Option<&PackingCertificate>) -> String {
    let cut_edges: EdgeSet = cert
        .map(|c| c.cuts.values().flat_map(|cut| cut.edges.iter().copied()).collect())
        .unwrap_or_default();
    let owner = cert.map(|c| c.paths.owner_map()).unwrap_or_default();
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let style = if t.contains(v) {
            " [shape=box, style=filled, fillcolor=lightblue]"
        } else {
            ""
        };
        writeln!(out, "  {}{style};", quote(g.name(v))).unwrap();
    }
    for (e, [a, b]) in g.edges() {
        let mut label = format!("e{e}");
        if let Some(i) = owner.get(&e) {
            write!(label, " P{i}").unwrap();
        }
        let mut attrs = format!("label={}", quote(&label));
        if cut_edges.contains(&e) {
            attrs.push_str(", color=red, penwidth=2");
        }
        writeln!(out, "  {} -- {} [{attrs}];", quote(g.name(a)), quote(g.name(b))).unwrap();
    }
    out.push_str("}\n");
    out
}
