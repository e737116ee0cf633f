use super::{EdgeSet, Multigraph, TerminalSet, VertexId};
use crate::error::Result;
use crate::path::{shortcut_walk, Path};
use std::collections::BTreeMap;

/// One member of a partition of E into cycles and T-paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EulerPart {
    /// Closed: `vertices.first() == vertices.last()`.
    Cycle(Path),
    TPath(Path),
}

impl EulerPart {
    pub fn path(&self) -> &Path {
        match self {
            EulerPart::Cycle(p) | EulerPart::TPath(p) => p,
        }
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.path().edge_set()
    }
}

/// Partitions the edges of an inner-Eulerian graph into cycles and T-paths.
///
/// Maximal trails are walked from odd-degree terminals first; what is left
/// has only even degrees and is peeled into closed trails. Every trail is
/// shortcut at repeated vertices, and the open remainder is cut at its
/// internal terminals.
pub fn eulerian_decomposition(g: &Multigraph, t: &TerminalSet) -> Result<Vec<EulerPart>> {
    g.require_inner_eulerian(t)?;
    let mut remaining: BTreeMap<VertexId, EdgeSet> =
        g.vertices().map(|v| (v, g.incident(v).collect())).collect();
    let mut parts = Vec::new();

    loop {
        let start = t
            .iter()
            .find(|v| remaining[v].len() % 2 == 1);
        let Some(start) = start else { break };
        let trail = walk_trail(g, &mut remaining, start);
        let (open, cycles) = shortcut_walk(&trail);
        parts.extend(cycles.into_iter().map(EulerPart::Cycle));
        parts.extend(split_at_terminals(&open, t).into_iter().map(EulerPart::TPath));
    }
    while let Some(start) = remaining
        .iter()
        .find(|(_, inc)| !inc.is_empty())
        .map(|(v, _)| *v)
    {
        let trail = walk_trail(g, &mut remaining, start);
        let (_, cycles) = shortcut_walk(&trail);
        parts.extend(cycles.into_iter().map(EulerPart::Cycle));
    }
    Ok(parts)
}

fn walk_trail(g: &Multigraph, remaining: &mut BTreeMap<VertexId, EdgeSet>, start: VertexId) -> Path {
    let mut trail = Path::trivial(start);
    let mut at = start;
    while let Some(e) = remaining[&at].iter().next().copied() {
        let next = g.other_end(e, at).unwrap();
        remaining.get_mut(&at).unwrap().remove(&e);
        remaining.get_mut(&next).unwrap().remove(&e);
        trail.vertices.push(next);
        trail.edges.push(e);
        at = next;
    }
    trail
}

fn split_at_terminals(path: &Path, t: &TerminalSet) -> Vec<Path> {
    let mut out = Vec::new();
    let mut current = Path::trivial(path.first());
    for (i, e) in path.edges.iter().enumerate() {
        let next = path.vertices[i + 1];
        current.vertices.push(next);
        current.edges.push(*e);
        if t.contains(next) {
            out.push(std::mem::replace(&mut current, Path::trivial(next)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::EdgeId;

    fn check_partition(g: &Multigraph, t: &TerminalSet, parts: &[EulerPart]) {
        let mut seen = EdgeSet::new();
        for part in parts {
            for e in &part.path().edges {
                assert!(seen.insert(*e), "edge {e} used twice");
            }
            match part {
                EulerPart::TPath(p) => assert!(p.is_t_path(g, t), "{p:?}"),
                EulerPart::Cycle(p) => {
                    assert_eq!(p.first(), p.last());
                    let inner = Path {
                        vertices: p.vertices[..p.vertices.len() - 1].to_vec(),
                        edges: p.edges[..p.edges.len() - 1].to_vec(),
                    };
                    assert!(inner.check(g).is_ok());
                    assert!(p.edges.len() >= 2);
                }
            }
        }
        assert_eq!(seen, g.edge_set());
    }

    #[test]
    fn triangle_is_one_cycle() {
        let g = Multigraph::from_named(
            &["t1", "t2", "t3"],
            &[("t1", "t2"), ("t2", "t3"), ("t1", "t3")],
        )
        .unwrap();
        let t = TerminalSet::from_names(&g, &["t1"]).unwrap();
        let parts = eulerian_decomposition(&g, &t).unwrap();
        assert_eq!(parts.len(), 1);
        assert!(matches!(parts[0], EulerPart::Cycle(_)));
        check_partition(&g, &t, &parts);
    }

    #[test]
    fn path_is_one_t_path() {
        let g = Multigraph::from_named(&["t1", "v", "t2"], &[("t1", "v"), ("v", "t2")]).unwrap();
        let t = TerminalSet::from_names(&g, &["t1", "t2"]).unwrap();
        let parts = eulerian_decomposition(&g, &t).unwrap();
        assert_eq!(parts.len(), 1);
        assert!(matches!(&parts[0], EulerPart::TPath(p) if p.edges == vec![EdgeId(1), EdgeId(2)]));
    }

    #[test]
    fn theta_is_cycle_plus_t_path() {
        let g = Multigraph::from_named(
            &["t1", "t2", "a", "b", "c"],
            &[
                ("t1", "a"),
                ("a", "t2"),
                ("t1", "b"),
                ("b", "t2"),
                ("t1", "c"),
                ("c", "t2"),
            ],
        )
        .unwrap();
        let t = TerminalSet::from_names(&g, &["t1", "t2"]).unwrap();
        let parts = eulerian_decomposition(&g, &t).unwrap();
        check_partition(&g, &t, &parts);
        let cycles = parts.iter().filter(|p| matches!(p, EulerPart::Cycle(_))).count();
        assert_eq!((cycles, parts.len()), (1, 2));
    }

    #[test]
    fn pendant_terminal_edge_lands_in_t_path() {
        // t1 - v - t2 plus a triangle through v
        let g = Multigraph::from_named(
            &["t1", "v", "t2", "x", "y"],
            &[("t1", "v"), ("v", "t2"), ("v", "x"), ("x", "y"), ("y", "v")],
        )
        .unwrap();
        let t = TerminalSet::from_names(&g, &["t1", "t2"]).unwrap();
        let parts = eulerian_decomposition(&g, &t).unwrap();
        check_partition(&g, &t, &parts);
        let holder = parts.iter().find(|p| p.path().contains_edge(EdgeId(1))).unwrap();
        assert!(matches!(holder, EulerPart::TPath(_)));
    }

    #[test]
    fn rejects_odd_inner_vertex() {
        let g = Multigraph::from_named(&["c", "x", "y", "z"], &[("c", "x"), ("c", "y"), ("c", "z")])
            .unwrap();
        let t = TerminalSet::from_names(&g, &["x", "y", "z"]).unwrap();
        assert!(eulerian_decomposition(&g, &t).is_err());
    }
}
