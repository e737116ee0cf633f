//! The minimum cuts between s and t form a lattice; this prints its two
//! extremes and checks that meet and join stay inside it.

use tpaths::menger::{cut_join, cut_meet, min_cut_largest, min_cut_smallest};
use tpaths::{Multigraph, VertexSet};

fn main() -> tpaths::Result<()> {
    // a chain s=a=b=t of double edges: three minimum cuts of size 2
    let mut es = Vec::new();
    for pair in [("s", "a"), ("a", "b"), ("b", "t")] {
        es.extend([pair, pair]);
    }
    let g = Multigraph::from_named(&["s", "a", "b", "t"], &es)?;
    let a = VertexSet::from([g.vertex_by_name("s")?]);
    let b = VertexSet::from([g.vertex_by_name("t")?]);
    let small = min_cut_smallest(&g, &a, &b)?;
    let large = min_cut_largest(&g, &a, &b)?;
    let show = |s: &VertexSet| s.iter().map(|v| g.name(*v)).collect::<Vec<_>>().join(",");
    println!("smallest side {{{}}}", show(&small.side));
    println!("largest side  {{{}}}", show(&large.side));
    assert_eq!(cut_meet(&g, &a, &b, &small, &large)?.side, small.side);
    assert_eq!(cut_join(&g, &a, &b, &small, &large)?.side, large.side);
    Ok(())
}
