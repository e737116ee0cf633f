use super::{Multigraph, TerminalSet, VertexId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeBounds {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for SizeBounds {
    fn default() -> Self {
        SizeBounds {
            max_vertices: 8,
            max_edges: 12,
        }
    }
}

/// Deterministic fuzz instance: a union of random cycles and random T-paths,
/// which is inner Eulerian by construction.
pub fn random_inner_eulerian(seed: u64, bounds: SizeBounds) -> (Multigraph, TerminalSet) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=bounds.max_vertices.max(2));
    let mut g = Multigraph::new();
    let vertices: Vec<VertexId> = (0..n)
        .map(|i| g.add_vertex(&format!("v{i}")).unwrap())
        .collect();
    let k = rng.gen_range(2..=n);
    let mut shuffled = vertices.clone();
    shuffled.shuffle(&mut rng);
    let (terms, inner) = shuffled.split_at(k);
    let t = TerminalSet::new(&g, terms.iter().copied()).unwrap();
    let inner = inner.to_vec();

    let budget = bounds.max_edges;
    let pieces = rng.gen_range(1..=budget.max(1));
    for _ in 0..pieces {
        let route = if rng.gen_bool(0.5) {
            random_t_path(&mut rng, terms, &inner)
        } else {
            random_cycle(&mut rng, &vertices)
        };
        let Some(route) = route else { continue };
        if g.edge_count() + route.len() - 1 > budget {
            continue;
        }
        for w in route.windows(2) {
            g.push_edge(w[0], w[1]).unwrap();
        }
    }
    (g, t)
}

fn random_t_path(rng: &mut ChaCha8Rng, terms: &[VertexId], inner: &[VertexId]) -> Option<Vec<VertexId>> {
    if terms.len() < 2 {
        return None;
    }
    let ends: Vec<_> = terms.choose_multiple(rng, 2).copied().collect();
    let hops = rng.gen_range(0..=inner.len().min(3));
    let mut route = vec![ends[0]];
    route.extend(inner.choose_multiple(rng, hops).copied());
    route.push(ends[1]);
    Some(route)
}

fn random_cycle(rng: &mut ChaCha8Rng, vertices: &[VertexId]) -> Option<Vec<VertexId>> {
    let len = rng.gen_range(2..=vertices.len().min(4));
    if len > vertices.len() {
        return None;
    }
    let mut route: Vec<_> = vertices.choose_multiple(rng, len).copied().collect();
    route.push(route[0]);
    Some(route)
}
