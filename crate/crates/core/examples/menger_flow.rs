//! Maximum edge-disjoint paths between two vertex sets, with an orthogonal
//! minimum cut as proof of optimality.

use tpaths::menger::{is_orthogonal, max_disjoint_paths};
use tpaths::{Multigraph, VertexSet};

fn main() -> tpaths::Result<()> {
    // two parallel routes s-a-t plus a bridge through b
    let g = Multigraph::from_named(
        &["s", "a", "b", "t"],
        &[("s", "a"), ("s", "a"), ("a", "t"), ("s", "b"), ("b", "t"), ("a", "b")],
    )?;
    let a = VertexSet::from([g.vertex_by_name("s")?]);
    let b = VertexSet::from([g.vertex_by_name("t")?]);
    let flow = max_disjoint_paths(&g, &a, &b)?;
    println!("lambda(s, t) = {}", flow.value());
    for p in flow.paths.iter() {
        let names: Vec<&str> = p.vertices.iter().map(|v| g.name(*v)).collect();
        println!("  path {}", names.join(" - "));
    }
    let side: Vec<&str> = flow.cut.side.iter().map(|v| g.name(*v)).collect();
    println!("cut side {{{}}}, {} edges", side.join(", "), flow.cut.edges.len());
    assert!(is_orthogonal(&flow.cut.edges, &flow.paths));
    Ok(())
}
