//! The closure operation on edge sets and the decomposition of E into
//! closed pieces, each of which again admits a covering T-path system.

use crate::error::{Error, Result};
use crate::menger::max_disjoint_paths;
use crate::multigraph::{eulerian_decomposition, EdgeSet, Multigraph, TerminalSet, VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureSystem {
    pub edges: EdgeSet,
    /// 𝒪: a partition of E into cycles and T-paths.
    pub cycles: Vec<EdgeSet>,
    /// ℰ: edge sets of the paths covering δ(t), tagged with t, for d(t) > 1.
    pub witnesses: Vec<(VertexId, EdgeSet)>,
}

impl ClosureSystem {
    /// Checks that `cycles` partitions `edges` and every witness lies in `edges`.
    pub fn new(edges: EdgeSet, cycles: Vec<EdgeSet>, witnesses: Vec<(VertexId, EdgeSet)>) -> Result<Self> {
        let mut seen = EdgeSet::new();
        for e in cycles.iter().flatten() {
            if !edges.contains(e) || !seen.insert(*e) {
                return Err(Error::InvalidPaths(format!("cycle family does not partition the edges at {e}")));
            }
        }
        if seen != edges {
            return Err(Error::InvalidPaths("cycle family misses an edge".into()));
        }
        if let Some(e) = witnesses.iter().flat_map(|(_, w)| w).find(|e| !edges.contains(e)) {
            return Err(Error::UnknownEdge(*e));
        }
        Ok(ClosureSystem {
            edges,
            cycles,
            witnesses,
        })
    }

    /// 𝒪 from a cycle decomposition of G/T (T contracted to its smallest
    /// vertex), with edges inside T as singletons; ℰ from maximum flows
    /// between each t with d(t) > 1 and T − t.
    pub fn build(g: &Multigraph, t: &TerminalSet) -> Result<Self> {
        g.require_inner_eulerian(t)?;
        let mut cycles = Vec::new();
        if let Some(root) = t.iter().next() {
            let spanned: EdgeSet = g
                .edges()
                .filter(|(_, [a, b])| t.contains(*a) && t.contains(*b))
                .map(|(e, _)| e)
                .collect();
            cycles.extend(spanned.iter().map(|e| EdgeSet::from([*e])));
            let contracted = g.contract_set(root, t.as_set())?;
            let single = TerminalSet::new(&contracted, [root])?;
            cycles.extend(eulerian_decomposition(&contracted, &single)?.iter().map(|p| p.edge_set()));
        } else {
            cycles.extend(eulerian_decomposition(g, t)?.iter().map(|p| p.edge_set()));
        }
        let mut witnesses = Vec::new();
        for x in t.iter().filter(|x| g.degree(*x) > 1) {
            let flow = max_disjoint_paths(g, &VertexSet::from([x]), &t.others(x))?;
            if flow.value() != g.degree(x) {
                return Err(Error::NotLinkable {
                    terminal: x,
                    lambda: flow.value(),
                    degree: g.degree(x),
                });
            }
            witnesses.extend(flow.paths.iter().map(|p| (x, p.edge_set())));
        }
        ClosureSystem::new(g.edge_set(), cycles, witnesses)
    }
}

/// c(F₀): the least superset of `f0` that contains every member of 𝒪 or ℰ it meets.
pub fn c_close(sys: &ClosureSystem, f0: &EdgeSet) -> Result<EdgeSet> {
    if let Some(e) = f0.iter().find(|e| !sys.edges.contains(e)) {
        return Err(Error::UnknownEdge(*e));
    }
    let members: Vec<&EdgeSet> = sys.cycles.iter().chain(sys.witnesses.iter().map(|(_, w)| w)).collect();
    let mut f = f0.clone();
    loop {
        let mut next = f.clone();
        for m in &members {
            if !m.is_disjoint(&f) {
                next.extend(m.iter().copied());
            }
        }
        if next.len() == f.len() {
            return Ok(f);
        }
        f = next;
    }
}

/// E split into closed pieces c({e}), each seeded by the lowest unused edge.
pub fn closed_partition(sys: &ClosureSystem) -> Vec<EdgeSet> {
    let mut left = sys.edges.clone();
    let mut pieces = Vec::new();
    while let Some(&e) = left.first() {
        let piece = c_close(sys, &EdgeSet::from([e])).expect("edge of the system");
        left.retain(|x| !piece.contains(x));
        pieces.push(piece);
    }
    pieces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::EdgeId;
    use crate::packing::linkability_check;

    fn ids(xs: &[u32]) -> EdgeSet {
        xs.iter().map(|i| EdgeId(*i)).collect()
    }

    #[test]
    fn single_cycle_closes() {
        let sys = ClosureSystem::new(ids(&[1, 2, 3, 4]), vec![ids(&[1, 2, 3]), ids(&[4])], vec![]).unwrap();
        assert_eq!(c_close(&sys, &ids(&[2])).unwrap(), ids(&[1, 2, 3]));
        assert_eq!(c_close(&sys, &EdgeSet::new()).unwrap(), EdgeSet::new());
        assert_eq!(c_close(&sys, &ids(&[9])), Err(Error::UnknownEdge(EdgeId(9))));
    }

    #[test]
    fn two_step_fixpoint() {
        // O1 = {1,2,3}, O2 = {5,6,7}, O3 = {4}; E(P) = {3,4,5}
        let sys = ClosureSystem::new(
            ids(&[1, 2, 3, 4, 5, 6, 7]),
            vec![ids(&[1, 2, 3]), ids(&[4]), ids(&[5, 6, 7])],
            vec![(VertexId(0), ids(&[3, 4, 5]))],
        )
        .unwrap();
        assert_eq!(c_close(&sys, &ids(&[1])).unwrap(), ids(&[1, 2, 3, 4, 5, 6, 7]));
        assert_eq!(closed_partition(&sys).len(), 1);
    }

    #[test]
    fn invalid_cycle_family_rejected() {
        assert!(ClosureSystem::new(ids(&[1, 2]), vec![ids(&[1])], vec![]).is_err());
        assert!(ClosureSystem::new(ids(&[1, 2]), vec![ids(&[1, 2]), ids(&[2])], vec![]).is_err());
    }

    fn assert_pieces_satisfy_premise(g: &Multigraph, t: &TerminalSet, pieces: &[EdgeSet]) {
        for piece in pieces {
            let h = g.edge_subgraph(piece);
            assert!(h.is_inner_eulerian(t).is_ok());
            for x in t.iter() {
                assert!(linkability_check(&h, t, x).unwrap());
            }
        }
    }

    #[test]
    fn disjoint_components_give_two_pieces() {
        let g = Multigraph::from_named(
            &["t1", "v", "t2", "t3", "w", "t4"],
            &[("t1", "v"), ("v", "t2"), ("t3", "w"), ("w", "t4")],
        )
        .unwrap();
        let t = TerminalSet::from_names(&g, &["t1", "t2", "t3", "t4"]).unwrap();
        let pieces = closed_partition(&ClosureSystem::build(&g, &t).unwrap());
        assert_eq!(pieces, vec![ids(&[1, 2]), ids(&[3, 4])]);
        assert_pieces_satisfy_premise(&g, &t, &pieces);
    }

    #[test]
    fn four_cycle_splits_into_its_two_paths() {
        let g = Multigraph::from_named(
            &["t1", "t2", "a", "b"],
            &[("t1", "a"), ("a", "t2"), ("t1", "b"), ("b", "t2")],
        )
        .unwrap();
        let t = TerminalSet::from_names(&g, &["t1", "t2"]).unwrap();
        let pieces = closed_partition(&ClosureSystem::build(&g, &t).unwrap());
        assert_eq!(pieces, vec![ids(&[1, 2]), ids(&[3, 4])]);
        assert_pieces_satisfy_premise(&g, &t, &pieces);
    }

    #[test]
    fn unlinkable_terminal_rejected() {
        let g = Multigraph::from_named(&["t1", "a", "b", "t2"], &[("t1", "a"), ("a", "b"), ("b", "t1")]).unwrap();
        let t = TerminalSet::from_names(&g, &["t1", "t2"]).unwrap();
        assert!(matches!(ClosureSystem::build(&g, &t), Err(Error::NotLinkable { .. })));
    }

    #[test]
    fn chained_instance_is_one_piece() {
        // 𝒪 = {1,2}, {3,4}; ℰ = {1,3}, {2,4}
        let g = Multigraph::from_named(
            &["t1", "t2", "t3", "v"],
            &[("t1", "v"), ("t1", "v"), ("v", "t2"), ("v", "t3")],
        )
        .unwrap();
        let t = TerminalSet::from_names(&g, &["t1", "t2", "t3"]).unwrap();
        let sys = ClosureSystem::build(&g, &t).unwrap();
        assert_eq!(sys.cycles, vec![ids(&[1, 2]), ids(&[3, 4])]);
        assert_eq!(closed_partition(&sys), vec![g.edge_set()]);
    }

    #[test]
    fn edgeless_graph_has_no_pieces() {
        let g = Multigraph::from_named(&["a", "b"], &[]).unwrap();
        let t = TerminalSet::from_names(&g, &["a", "b"]).unwrap();
        assert!(closed_partition(&ClosureSystem::build(&g, &t).unwrap()).is_empty());
    }
}
