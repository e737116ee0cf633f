//! Solve a packing instance read from the graph text format and check its
//! certificate: one orthogonal cut per terminal of size λ(t, T − t).

use tpaths::multigraph::parse_graph;
use tpaths::packing::{solve, verify_certificate};

const INPUT: &str = "\
# K4 with two terminals and a doubled inner edge
terminal t1
terminal t2
vertex a
vertex b
edge 1 t1 a
edge 2 t1 b
edge 3 a b
edge 4 a b
edge 5 a t2
edge 6 b t2
edge 7 t1 t2
";

fn main() -> tpaths::Result<()> {
    let (g, t) = parse_graph(INPUT)?;
    let cert = solve(&g, &t)?;
    println!("{} edge-disjoint T-paths", cert.paths.len());
    for p in cert.paths.iter() {
        let names: Vec<&str> = p.vertices.iter().map(|v| g.name(*v)).collect();
        println!("  {} via edges {:?}", names.join(" - "), p.edges.iter().map(|e| e.0).collect::<Vec<_>>());
    }
    for (x, cut) in &cert.cuts {
        println!("cut at {}: {:?}", g.name(*x), cut.edges.iter().map(|e| e.0).collect::<Vec<_>>());
    }
    match verify_certificate(&g, &t, &cert) {
        Ok(()) => println!("certificate verified"),
        Err(e) => println!("certificate rejected: {e}"),
    }
    Ok(())
}
