//! Random inner Eulerian instances checked against both oracles, the same
//! loop the `fuzz` subcommand runs.

use tpaths::cli::fuzz_one;
use tpaths::multigraph::SizeBounds;

fn main() {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let bounds = SizeBounds::default();
    let mut bad = 0;
    for s in seed..seed + 50 {
        let r = fuzz_one(s, bounds);
        if let Some(m) = &r.mismatch {
            println!("seed {s}: {m}");
            bad += 1;
        }
    }
    println!("{} of 50 instances disagree", bad);
}
