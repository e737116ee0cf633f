//! Decompose E into closed pieces; each piece is again inner Eulerian and
//! every terminal stays linkable inside it.

use tpaths::closure::{closed_partition, ClosureSystem};
use tpaths::packing::linkability_check;
use tpaths::{Multigraph, TerminalSet};

fn main() -> tpaths::Result<()> {
    // the two paths out of t1 chain everything at v together; the v=w
    // double edge is a cycle that no T-path needs
    let g = Multigraph::from_named(
        &["t1", "t2", "t3", "v", "w"],
        &[("t1", "v"), ("t1", "v"), ("v", "t2"), ("v", "t3"), ("v", "w"), ("v", "w")],
    )?;
    let t = TerminalSet::from_names(&g, &["t1", "t2", "t3"])?;
    let sys = ClosureSystem::build(&g, &t)?;
    let pieces = closed_partition(&sys);
    for (i, piece) in pieces.iter().enumerate() {
        let h = g.edge_subgraph(piece);
        let ok = h.is_inner_eulerian(&t).is_ok()
            && t.iter().all(|x| linkability_check(&h, &t, x).unwrap_or(false));
        println!("piece {i}: edges {:?}, premise holds: {ok}", piece.iter().map(|e| e.0).collect::<Vec<_>>());
    }
    Ok(())
}
