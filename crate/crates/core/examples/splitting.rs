//! Splitting off pairs of edges at inner vertices until only terminals are
//! left, then lifting the resulting single-edge paths back.

use tpaths::packing::{complete_splitting, lift_paths, SplitRecord};
use tpaths::{Multigraph, TerminalSet};

fn main() -> tpaths::Result<()> {
    let g = Multigraph::from_named(
        &["t1", "t2", "t3", "t4", "v", "w"],
        &[("t1", "v"), ("t2", "v"), ("v", "w"), ("v", "w"), ("w", "t3"), ("w", "t4")],
    )?;
    let t = TerminalSet::from_names(&g, &["t1", "t2", "t3", "t4"])?;
    let (split, records) = complete_splitting(&g, &t)?;
    for r in &records {
        match r {
            SplitRecord::Split { vertex, e, f, h, .. } => {
                println!("split {e} and {f} at {} into {h}", g.name(*vertex))
            }
            SplitRecord::CycleDeletion { vertex, e, f, .. } => {
                println!("deleted parallel pair {e}, {f} at {}", g.name(*vertex))
            }
        }
    }
    let lifted = lift_paths(&records, &split);
    for p in lifted.iter() {
        let names: Vec<&str> = p.vertices.iter().map(|v| g.name(*v)).collect();
        println!("path {}", names.join(" - "));
    }
    Ok(())
}
