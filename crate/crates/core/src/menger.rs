//! Edge-disjoint path systems between vertex sets, orthogonal cuts and the
//! lattice of minimum cuts.
//!
//! All flows use unit capacities on undirected edges with BFS (shortest)
//! augmentation; ties are broken by the lowest edge id. A set endpoint is
//! handled by contracting it to a single node, so an AB-path never has an
//! internal vertex in A ∪ B.

use crate::error::{Error, Result};
use crate::flow::{EdgeFlow, Network};
use crate::multigraph::{Cut, EdgeId, EdgeSet, Multigraph, VertexId, VertexSet};
use crate::path::PathSystem;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowResult {
    pub paths: PathSystem,
    pub cut: Cut,
    pub orthogonal: bool,
}

impl FlowResult {
    /// λ(A, B).
    pub fn value(&self) -> usize {
        self.paths.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Augmentation {
    Augmented(PathSystem),
    Saturated(Cut),
}

/// A cut contains exactly one edge of each path and nothing off the paths.
pub fn is_orthogonal(cut: &EdgeSet, paths: &PathSystem) -> bool {
    let mut covered = EdgeSet::new();
    for p in &paths.paths {
        let hits: Vec<_> = p.edges.iter().filter(|e| cut.contains(e)).collect();
        if hits.len() != 1 {
            return false;
        }
        covered.insert(*hits[0]);
    }
    covered == *cut
}

/// True iff `edges` separates A from B and no proper subset does.
pub fn is_minimal_separator(g: &Multigraph, a: &VertexSet, b: &VertexSet, edges: &EdgeSet) -> bool {
    let connects = |removed: &EdgeSet| {
        let mut reach = VertexSet::new();
        for s in a {
            if !reach.contains(s) {
                reach.extend(g.reach(*s, |e| !removed.contains(&e)));
            }
        }
        reach.iter().any(|v| b.contains(v))
    };
    if connects(edges) {
        return false;
    }
    edges.iter().all(|e| {
        let mut fewer = edges.clone();
        fewer.remove(e);
        connects(&fewer)
    })
}

fn cut_from_side(g: &Multigraph, a: &VertexSet, b: &VertexSet, side: VertexSet) -> Cut {
    let edges = g.boundary_unchecked(&side);
    let minimal = is_minimal_separator(g, a, b, &edges);
    Cut {
        edges,
        side,
        minimal,
    }
}

/// Either grows `p` by one path (one new edge at each end set) or returns a
/// cut orthogonal to `p`.
pub fn augment_once(g: &Multigraph, a: &VertexSet, b: &VertexSet, p: &PathSystem) -> Result<Augmentation> {
    let mut flow = EdgeFlow::new(g, a, b)?;
    flow.load(p)?;
    if flow.augment() {
        Ok(Augmentation::Augmented(flow.paths()))
    } else {
        let side = flow.smallest_side();
        Ok(Augmentation::Saturated(cut_from_side(g, a, b, side)))
    }
}

/// A maximum AB-path system together with the ⪯-smallest minimum cut,
/// which is orthogonal to it.
pub fn max_disjoint_paths(g: &Multigraph, a: &VertexSet, b: &VertexSet) -> Result<FlowResult> {
    let mut flow = EdgeFlow::new(g, a, b)?;
    flow.run();
    let paths = flow.paths();
    let cut = cut_from_side(g, a, b, flow.smallest_side());
    let orthogonal = is_orthogonal(&cut.edges, &paths);
    Ok(FlowResult {
        paths,
        cut,
        orthogonal,
    })
}

/// λ(A, B): the maximum number of edge-disjoint AB-paths.
pub fn lambda(g: &Multigraph, a: &VertexSet, b: &VertexSet) -> Result<usize> {
    let mut flow = EdgeFlow::new(g, a, b)?;
    Ok(flow.run())
}

/// λ(t, T − t) for a single vertex against a set.
pub fn lambda_to(g: &Multigraph, t: VertexId, others: &VertexSet) -> Result<usize> {
    lambda(g, &VertexSet::from([t]), others)
}

/// The minimum AB-cut whose A-side is ⊆-minimal.
pub fn min_cut_smallest(g: &Multigraph, a: &VertexSet, b: &VertexSet) -> Result<Cut> {
    let mut flow = EdgeFlow::new(g, a, b)?;
    flow.run();
    Ok(cut_from_side(g, a, b, flow.smallest_side()))
}

/// The minimum AB-cut whose A-side is ⊆-maximal.
pub fn min_cut_largest(g: &Multigraph, a: &VertexSet, b: &VertexSet) -> Result<Cut> {
    let mut flow = EdgeFlow::new(g, a, b)?;
    flow.run();
    Ok(cut_from_side(g, a, b, flow.largest_side()))
}

fn require_minimum(g: &Multigraph, a: &VertexSet, b: &VertexSet, c: &Cut, value: usize) -> Result<()> {
    let ok = a.is_subset(&c.side)
        && c.side.is_disjoint(b)
        && g.boundary(&c.side)? == c.edges
        && c.edges.len() == value;
    if ok {
        Ok(())
    } else {
        Err(Error::NotMinimumCut)
    }
}

fn lattice_op(
    g: &Multigraph,
    a: &VertexSet,
    b: &VertexSet,
    c1: &Cut,
    c2: &Cut,
    combine: impl Fn(&VertexSet, &VertexSet) -> VertexSet,
) -> Result<Cut> {
    let value = lambda(g, a, b)?;
    require_minimum(g, a, b, c1, value)?;
    require_minimum(g, a, b, c2, value)?;
    Ok(cut_from_side(g, a, b, combine(&c1.side, &c2.side)))
}

/// δ(X₁ ∩ X₂) for minimum cuts δ(X₁), δ(X₂).
pub fn cut_meet(g: &Multigraph, a: &VertexSet, b: &VertexSet, c1: &Cut, c2: &Cut) -> Result<Cut> {
    lattice_op(g, a, b, c1, c2, |x, y| x.intersection(y).copied().collect())
}

/// δ(X₁ ∪ X₂) for minimum cuts δ(X₁), δ(X₂).
pub fn cut_join(g: &Multigraph, a: &VertexSet, b: &VertexSet, c1: &Cut, c2: &Cut) -> Result<Cut> {
    lattice_op(g, a, b, c1, c2, |x, y| x.union(y).copied().collect())
}

/// Merges two edge-disjoint st-path systems into one that keeps every
/// s-edge of `p` and every t-edge of `q`.
///
/// Reduction to a feasible flow with lower bounds: edges at `s` are only
/// usable out of `s`, edges at `t` only into `t`, and the required edges
/// carry a lower bound of one unit.
pub fn pym_merge(g: &Multigraph, s: VertexId, t: VertexId, p: &PathSystem, q: &PathSystem) -> Result<PathSystem> {
    if s == t {
        return Err(Error::OverlappingEndpoints(s));
    }
    let (sa, tb) = (VertexSet::from([s]), VertexSet::from([t]));
    for sys in [p, q] {
        // validates shape; the flow itself is discarded
        EdgeFlow::new(g, &sa, &tb)?.load(sys)?;
    }
    let must_s = p.delta_at(g, s);
    let must_t = q.delta_at(g, t);

    let index: BTreeMap<VertexId, usize> = g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let vertex: Vec<VertexId> = g.vertices().collect();
    let (ns, nt) = (index[&s], index[&t]);
    let mut net = Network::with_nodes(vertex.len());
    let super_source = net.add_node();
    let super_sink = net.add_node();

    // (edge, arc, from, to, lower bound)
    let mut arcs: Vec<(EdgeId, usize, usize, usize, bool)> = Vec::new();
    let mut lower = 0;
    for (e, [x, y]) in g.edges() {
        let (x, y) = (index[&x], index[&y]);
        let oriented = if x == ns || y == nt {
            Some((x, y))
        } else if y == ns || x == nt {
            Some((y, x))
        } else {
            None
        };
        match oriented {
            Some((from, to)) => {
                let bound = (from == ns && must_s.contains(&e)) || (to == nt && must_t.contains(&e));
                if bound {
                    lower += 1;
                    let arc = net.add_arc(from, to, 0);
                    net.add_arc(super_source, to, 1);
                    net.add_arc(from, super_sink, 1);
                    arcs.push((e, arc, from, to, true));
                } else {
                    let arc = net.add_arc(from, to, 1);
                    arcs.push((e, arc, from, to, false));
                }
            }
            None => {
                let fwd = net.add_arc(x, y, 1);
                let bwd = net.add_arc(y, x, 1);
                arcs.push((e, fwd, x, y, false));
                arcs.push((e, bwd, y, x, false));
            }
        }
    }
    net.add_arc(nt, ns, i64::MAX / 4);
    if net.max_flow(super_source, super_sink) != lower {
        return Err(Error::InfeasibleMerge);
    }

    // net flow per edge, oriented
    let mut per_edge: BTreeMap<EdgeId, (usize, usize, i64)> = BTreeMap::new();
    for (e, arc, from, to, bound) in &arcs {
        let f = if *bound { 1 } else { net.flow(*arc) };
        let entry = per_edge.entry(*e).or_insert((*from, *to, 0));
        if entry.0 == *from {
            entry.2 += f;
        } else {
            entry.2 -= f;
        }
    }
    let mut out: BTreeMap<usize, Vec<(EdgeId, usize)>> = BTreeMap::new();
    for (e, (from, to, f)) in per_edge {
        match f {
            1 => out.entry(from).or_default().push((e, to)),
            -1 => out.entry(to).or_default().push((e, from)),
            _ => {}
        }
    }
    let mut paths = Vec::new();
    while out.get(&ns).is_some_and(|l| !l.is_empty()) {
        let mut stack: Vec<(usize, Option<EdgeId>)> = vec![(ns, None)];
        let mut at = ns;
        while at != nt {
            let (e, next) = out.get_mut(&at).expect("flow conservation").remove(0);
            if let Some(pos) = stack.iter().position(|(n, _)| *n == next) {
                stack.truncate(pos + 1);
            } else {
                stack.push((next, Some(e)));
            }
            at = next;
        }
        paths.push(crate::path::Path {
            vertices: stack.iter().map(|(n, _)| vertex[*n]).collect(),
            edges: stack.iter().filter_map(|(_, e)| *e).collect(),
        });
    }
    Ok(PathSystem::new(paths))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: &Multigraph, names: &[&str]) -> VertexSet {
        names.iter().map(|n| g.vertex_by_name(n).unwrap()).collect()
    }

    fn edges(ids: &[u32]) -> EdgeSet {
        ids.iter().map(|i| EdgeId(*i)).collect()
    }

    /// s=4⇒a=3⇒b=2⇒t
    pub(crate) fn chain_432() -> Multigraph {
        let mut e = Vec::new();
        e.extend(std::iter::repeat_n(("s", "a"), 4));
        e.extend(std::iter::repeat_n(("a", "b"), 3));
        e.extend(std::iter::repeat_n(("b", "t"), 2));
        Multigraph::from_named(&["s", "a", "b", "t"], &e).unwrap()
    }

    fn two_paths() -> Multigraph {
        Multigraph::from_named(
            &["s", "a", "b", "t"],
            &[("s", "a"), ("a", "t"), ("s", "b"), ("b", "t")],
        )
        .unwrap()
    }

    #[test]
    fn augment_single_edge() {
        let g = Multigraph::from_named(&["s", "t"], &[("s", "t")]).unwrap();
        let (a, b) = (set(&g, &["s"]), set(&g, &["t"]));
        let first = augment_once(&g, &a, &b, &PathSystem::default()).unwrap();
        let Augmentation::Augmented(p) = first else { panic!() };
        assert_eq!(p.len(), 1);
        let second = augment_once(&g, &a, &b, &p).unwrap();
        assert_eq!(
            second,
            Augmentation::Saturated(Cut {
                edges: edges(&[1]),
                side: a.clone(),
                minimal: true
            })
        );
    }

    #[test]
    fn augment_zigzag() {
        // s-a 1, s-b 2, a-b 3, a-t 4, b-t 5
        let g = Multigraph::from_named(
            &["s", "a", "b", "t"],
            &[("s", "a"), ("s", "b"), ("a", "b"), ("a", "t"), ("b", "t")],
        )
        .unwrap();
        let (a, b) = (set(&g, &["s"]), set(&g, &["t"]));
        let p = PathSystem::new(vec![crate::path::Path {
            vertices: vec![g.vertex_by_name("s").unwrap(), g.vertex_by_name("a").unwrap(), g.vertex_by_name("b").unwrap(), g.vertex_by_name("t").unwrap()],
            edges: vec![EdgeId(1), EdgeId(3), EdgeId(5)],
        }]);
        let Augmentation::Augmented(q) = augment_once(&g, &a, &b, &p).unwrap() else {
            panic!()
        };
        assert_eq!(q.len(), 2);
        assert!(q.is_edge_disjoint());
        assert_eq!(q.delta_at(&g, a.first().copied().unwrap()), edges(&[1, 2]));
        assert!(matches!(augment_once(&g, &a, &b, &q).unwrap(), Augmentation::Saturated(_)));
    }

    #[test]
    fn parallel_three() {
        let g = Multigraph::from_named(&["u", "v"], &[("u", "v"), ("u", "v"), ("u", "v")]).unwrap();
        let r = max_disjoint_paths(&g, &set(&g, &["u"]), &set(&g, &["v"])).unwrap();
        assert_eq!(r.value(), 3);
        assert_eq!(r.cut.edges, edges(&[1, 2, 3]));
        assert!(r.orthogonal);
    }

    #[test]
    fn path_single_cut() {
        let g = Multigraph::from_named(&["t1", "v", "t2"], &[("t1", "v"), ("v", "t2")]).unwrap();
        let r = max_disjoint_paths(&g, &set(&g, &["t1"]), &set(&g, &["t2"])).unwrap();
        assert_eq!(r.value(), 1);
        assert_eq!(r.cut.edges, edges(&[1]));
    }

    #[test]
    fn chain_unique_min_cut() {
        let g = chain_432();
        let (a, b) = (set(&g, &["s"]), set(&g, &["t"]));
        let r = max_disjoint_paths(&g, &a, &b).unwrap();
        assert_eq!(r.value(), 2);
        assert_eq!(r.cut.edges, edges(&[8, 9]));
        assert_eq!(min_cut_smallest(&g, &a, &b).unwrap(), min_cut_largest(&g, &a, &b).unwrap());
    }

    #[test]
    fn lambda_examples() {
        let k4 = Multigraph::from_named(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")],
        )
        .unwrap();
        for x in ["a", "b", "c", "d"] {
            for y in ["a", "b", "c", "d"] {
                if x != y {
                    assert_eq!(lambda(&k4, &set(&k4, &[x]), &set(&k4, &[y])).unwrap(), 3);
                }
            }
        }
        let split = Multigraph::from_named(&["a", "b"], &[]).unwrap();
        assert_eq!(lambda(&split, &set(&split, &["a"]), &set(&split, &["b"])).unwrap(), 0);
        assert_eq!(
            lambda(&k4, &set(&k4, &["a"]), &set(&k4, &["a", "b"])),
            Err(Error::OverlappingEndpoints(VertexId(0)))
        );
    }

    #[test]
    fn two_path_lattice_extremes() {
        let g = two_paths();
        let (a, b) = (set(&g, &["s"]), set(&g, &["t"]));
        let lo = min_cut_smallest(&g, &a, &b).unwrap();
        let hi = min_cut_largest(&g, &a, &b).unwrap();
        assert_eq!(lo.edges, edges(&[1, 3]));
        assert_eq!(hi.edges, edges(&[2, 4]));
        assert!(lo.minimal && hi.minimal);
        assert_eq!(cut_meet(&g, &a, &b, &lo, &hi).unwrap(), lo);
        assert_eq!(cut_join(&g, &a, &b, &lo, &hi).unwrap(), hi);
        assert_eq!(cut_join(&g, &a, &b, &lo, &lo).unwrap(), lo);
        let mixed = Cut::of_side(&g, set(&g, &["s", "a"])).unwrap();
        assert_eq!(cut_meet(&g, &a, &b, &mixed, &hi).unwrap().side, set(&g, &["s", "a"]));
        let not_min = Cut::of_side(&g, set(&g, &["s", "a", "t"]));
        assert!(not_min.is_ok());
        let bad = Cut {
            edges: edges(&[1]),
            side: set(&g, &["s"]),
            minimal: false,
        };
        assert_eq!(cut_meet(&g, &a, &b, &bad, &lo), Err(Error::NotMinimumCut));
    }

    #[test]
    fn pym_examples() {
        let g = two_paths();
        let s = g.vertex_by_name("s").unwrap();
        let t = g.vertex_by_name("t").unwrap();
        let all = max_disjoint_paths(&g, &set(&g, &["s"]), &set(&g, &["t"])).unwrap().paths;
        assert_eq!(pym_merge(&g, s, t, &all, &all).unwrap().edge_set(), all.edge_set());

        let via_a = PathSystem::new(vec![all.paths.iter().find(|p| p.contains_edge(EdgeId(1))).unwrap().clone()]);
        let via_b = PathSystem::new(vec![all.paths.iter().find(|p| p.contains_edge(EdgeId(3))).unwrap().clone()]);
        let r = pym_merge(&g, s, t, &via_a, &via_b).unwrap();
        assert!(r.delta_at(&g, s).contains(&EdgeId(1)));
        assert!(r.delta_at(&g, t).contains(&EdgeId(4)));

        let r = pym_merge(&g, s, t, &PathSystem::default(), &via_b).unwrap();
        assert!(r.delta_at(&g, t).is_superset(&via_b.delta_at(&g, t)));
    }
}
