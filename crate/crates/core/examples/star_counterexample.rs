//! K_{1,3} with the leaves as terminals: half the sum of the terminal
//! connectivities is 3/2 but only one T-path fits, because the centre has
//! odd degree.

use tpaths::duality::brute_force_max_packing;
use tpaths::packing::terminal_lambdas;
use tpaths::{Multigraph, TerminalSet};

fn main() -> tpaths::Result<()> {
    let g = Multigraph::from_named(
        &["center", "l1", "l2", "l3"],
        &[("center", "l1"), ("center", "l2"), ("center", "l3")],
    )?;
    let t = TerminalSet::from_names(&g, &["l1", "l2", "l3"])?;
    let sum: usize = terminal_lambdas(&g, &t)?.values().sum();
    println!("half sum of lambdas: {sum}/2");
    println!("maximum packing: {}", brute_force_max_packing(&g, &t)?.len());
    if let Err(odd) = g.is_inner_eulerian(&t) {
        println!("not inner Eulerian: {} has odd degree {}", g.name(odd.vertex), odd.degree);
    }
    Ok(())
}
