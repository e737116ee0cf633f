//! Large waves and wave elimination: after contracting each terminal's large
//! wave, every terminal can be linked to the others through all its edges.

use tpaths::packing::terminal_lambdas;
use tpaths::waves::{large_wave, wave_elimination};
use tpaths::{Multigraph, TerminalSet};

fn main() -> tpaths::Result<()> {
    // s has degree 4 but only 2 edges reach t
    let g = Multigraph::from_named(
        &["s", "a", "b", "t"],
        &[("s", "a"), ("s", "a"), ("s", "a"), ("s", "a"), ("a", "b"), ("a", "b"), ("a", "b"), ("a", "b"), ("b", "t"), ("b", "t")],
    )?;
    let t = TerminalSet::from_names(&g, &["s", "t"])?;
    let s = g.vertex_by_name("s")?;
    let w = large_wave(&g, &t, s, None)?;
    let side: Vec<&str> = w.cut.side.iter().map(|v| g.name(*v)).collect();
    let cut: Vec<String> = w.cut.edges.iter().map(|e| e.to_string()).collect();
    println!("large wave at s: side {{{}}}, cut edges {}", side.join(", "), cut.join(" "));
    for (x, l) in terminal_lambdas(&g, &t)? {
        println!("before elimination {}: lambda {l}, degree {}", g.name(x), g.degree(x));
    }

    assert!(g.is_inner_eulerian(&t).is_ok());
    let order: Vec<_> = t.iter().collect();
    let record = wave_elimination(&g, &t, &order)?;
    let lambdas = terminal_lambdas(&record.result, &t)?;
    for (x, l) in &lambdas {
        println!("after elimination {}: lambda {l} = degree {}", g.name(*x), record.result.degree(*x));
        assert_eq!(*l, record.result.degree(*x));
    }
    Ok(())
}
