//! Exhaustive small instances up to isomorphism, for oracle comparisons.
//!
//! A graph on `n` vertices is a multiplicity vector over the `n(n-1)/2`
//! vertex pairs; two (terminal mask, multiplicities) pairs are identified
//! when a vertex permutation maps one onto the other.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use itertools::Itertools;

use crate::multigraph::{Multigraph, TerminalSet, VertexId};

#[derive(Clone, Debug)]
pub struct Bounds {
    pub vertices: RangeInclusive<usize>,
    pub max_edges: usize,
    pub max_multiplicity: usize,
    pub connected: bool,
    pub terminals: RangeInclusive<usize>,
    /// Keep only terminal sets that make the graph inner Eulerian.
    pub inner_eulerian: bool,
}

impl Bounds {
    /// Connected, inner Eulerian, at most 5 vertices and 8 edges, multiplicity ≤ 3.
    pub fn eulerian_small() -> Bounds {
        Bounds {
            vertices: 1..=5,
            max_edges: 8,
            max_multiplicity: 3,
            connected: true,
            terminals: 1..=5,
            inner_eulerian: true,
        }
    }

    /// Any parity, possibly disconnected, at most 5 vertices and 7 edges, 2 to 4 terminals.
    pub fn mader_small() -> Bounds {
        Bounds {
            vertices: 2..=5,
            max_edges: 7,
            max_multiplicity: 7,
            connected: false,
            terminals: 2..=4,
            inner_eulerian: false,
        }
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).tuple_combinations().collect()
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn multiplicity_vectors(len: usize, budget: usize, cap: usize) -> Vec<Vec<u8>> {
    fn go(cur: &mut Vec<u8>, len: usize, budget: usize, cap: usize, out: &mut Vec<Vec<u8>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for k in 0..=budget.min(cap) {
            cur.push(k as u8);
            go(cur, len, budget - k, cap, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(len), len, budget, cap, &mut out);
    out
}

fn is_connected(n: usize, ps: &[(usize, usize)], mult: &[u8]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (k, &(i, j)) in ps.iter().enumerate() {
        if mult[k] > 0 {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
    }
    let root = find(&mut parent, 0);
    (1..n).all(|v| find(&mut parent, v) == root)
}

fn permuted(n: usize, ps: &[(usize, usize)], perm: &[usize], mask: u32, mult: &[u8]) -> (u32, Vec<u8>) {
    let mut m = vec![0u8; mult.len()];
    for (k, &(i, j)) in ps.iter().enumerate() {
        m[pair_index(n, perm[i], perm[j])] = mult[k];
    }
    let mut out = 0u32;
    for (i, &p) in perm.iter().enumerate() {
        if mask >> i & 1 == 1 {
            out |= 1 << p;
        }
    }
    (out, m)
}

fn build(n: usize, ps: &[(usize, usize)], mask: u32, mult: &[u8]) -> (Multigraph, TerminalSet) {
    let mut g = Multigraph::new();
    for i in 0..n {
        g.add_vertex(&format!("v{i}")).expect("fresh name");
    }
    for (k, &(i, j)) in ps.iter().enumerate() {
        for _ in 0..mult[k] {
            g.push_edge(VertexId(i as u32), VertexId(j as u32)).expect("distinct endpoints");
        }
    }
    let t = TerminalSet::new(&g, (0..n).filter(|i| mask >> i & 1 == 1).map(|i| VertexId(i as u32)))
        .expect("terminals are vertices");
    (g, t)
}

/// Every (G, T) within `bounds`, one representative per isomorphism class,
/// in a deterministic order.
pub fn instances(bounds: &Bounds) -> Vec<(Multigraph, TerminalSet)> {
    let mut out = Vec::new();
    for n in bounds.vertices.clone() {
        let ps = pairs(n);
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let mut seen: BTreeSet<(u32, Vec<u8>)> = BTreeSet::new();
        for mult in multiplicity_vectors(ps.len(), bounds.max_edges, bounds.max_multiplicity) {
            if bounds.connected && !is_connected(n, &ps, &mult) {
                continue;
            }
            let mut degree = vec![0usize; n];
            for (k, &(i, j)) in ps.iter().enumerate() {
                degree[i] += mult[k] as usize;
                degree[j] += mult[k] as usize;
            }
            for mask in 0u32..(1 << n) {
                if !bounds.terminals.contains(&(mask.count_ones() as usize)) {
                    continue;
                }
                if bounds.inner_eulerian && (0..n).any(|v| mask >> v & 1 == 0 && degree[v] % 2 == 1) {
                    continue;
                }
                let key = perms
                    .iter()
                    .map(|p| permuted(n, &ps, p, mask, &mult))
                    .min()
                    .expect("at least one permutation");
                if seen.insert(key.clone()) {
                    out.push(build(n, &ps, key.0, &key.1));
                }
            }
        }
    }
    out
}
