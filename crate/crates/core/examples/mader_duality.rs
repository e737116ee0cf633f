//! Mader's min-max formula on a graph that is not inner Eulerian: the
//! minimising T-partition certifies that the brute-force packing is maximum.

use tpaths::duality::{all_maximum_packings, check_condition_weak, mader_min, obstructive_components};
use tpaths::{Multigraph, TerminalSet};

fn main() -> tpaths::Result<()> {
    // two stars sharing a leaf, both centres odd
    let g = Multigraph::from_named(
        &["a", "b", "c", "d", "e", "x", "y"],
        &[("x", "a"), ("x", "b"), ("x", "c"), ("y", "c"), ("y", "d"), ("y", "e")],
    )?;
    let t = TerminalSet::from_names(&g, &["a", "b", "c", "d", "e"])?;
    let (bound, partition) = mader_min(&g, &t)?;
    println!("Mader bound {bound}");
    let report = obstructive_components(&g, &t, &partition)?;
    println!("{} obstructive components", report.count());
    let maximum = all_maximum_packings(&g, &t)?;
    println!("{} maximum packings of size {}", maximum.len(), maximum[0].len());
    for p in &maximum {
        assert!(check_condition_weak(&g, &t, p, &partition));
    }
    println!("every maximum packing satisfies complementary slackness with it");
    Ok(())
}
