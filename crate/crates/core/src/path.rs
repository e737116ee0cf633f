//! Paths and systems of edge-disjoint paths.

use crate::multigraph::{EdgeId, EdgeSet, Multigraph, TerminalSet, VertexId, VertexSet};
use std::collections::BTreeMap;

/// A walk stored as `vertices[0] -edges[0]- vertices[1] - ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Path {
        Path {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn first_edge(&self) -> Option<EdgeId> {
        self.edges.first().copied()
    }

    pub fn last_edge(&self) -> Option<EdgeId> {
        self.edges.last().copied()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn reversed(&self) -> Path {
        let mut p = self.clone();
        p.vertices.reverse();
        p.edges.reverse();
        p
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges.iter().copied().collect()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn join(mut self, other: &Path) -> Path {
        debug_assert_eq!(self.last(), other.first());
        self.vertices.extend_from_slice(&other.vertices[1..]);
        self.edges.extend_from_slice(&other.edges);
        self
    }

    /// Prefix ending with the edge at `index`.
    pub fn truncate_after_edge(&self, index: usize) -> Path {
        Path {
            vertices: self.vertices[..index + 2].to_vec(),
            edges: self.edges[..index + 1].to_vec(),
        }
    }

    /// Checks that the path is a walk in `g` with no repeated vertex.
    pub fn check(&self, g: &Multigraph) -> Result<(), PathDefect> {
        if self.vertices.len() != self.edges.len() + 1 {
            return Err(PathDefect::Malformed);
        }
        for (i, e) in self.edges.iter().enumerate() {
            if !g.has_edge(*e) {
                return Err(PathDefect::UnknownEdge(*e));
            }
            if g.other_end(*e, self.vertices[i]) != Some(self.vertices[i + 1]) {
                return Err(PathDefect::NotIncident(*e));
            }
        }
        let mut seen = VertexSet::new();
        for v in &self.vertices {
            if !g.has_vertex(*v) {
                return Err(PathDefect::UnknownVertex(*v));
            }
            if !seen.insert(*v) {
                return Err(PathDefect::RepeatedVertex(*v));
            }
        }
        Ok(())
    }

    /// A simple path joining two distinct terminals with no terminal inside.
    pub fn check_t_path(&self, g: &Multigraph, t: &TerminalSet) -> Result<(), PathDefect> {
        self.check(g)?;
        if self.edges.is_empty() || !t.contains(self.first()) || !t.contains(self.last()) {
            return Err(PathDefect::NotTPath);
        }
        if self.vertices[1..self.vertices.len() - 1]
            .iter()
            .any(|v| t.contains(*v))
        {
            return Err(PathDefect::NotTPath);
        }
        Ok(())
    }

    pub fn is_t_path(&self, g: &Multigraph, t: &TerminalSet) -> bool {
        self.check_t_path(g, t).is_ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathDefect {
    Malformed,
    UnknownEdge(EdgeId),
    UnknownVertex(VertexId),
    NotIncident(EdgeId),
    RepeatedVertex(VertexId),
    NotTPath,
}

impl std::fmt::Display for PathDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PathDefect::Malformed => write!(f, "vertex and edge counts disagree"),
            PathDefect::UnknownEdge(e) => write!(f, "unknown edge {e}"),
            PathDefect::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            PathDefect::NotIncident(e) => write!(f, "edge {e} does not join consecutive vertices"),
            PathDefect::RepeatedVertex(v) => write!(f, "vertex {v} repeats"),
            PathDefect::NotTPath => write!(f, "not a T-path"),
        }
    }
}

/// An ordered list of paths; most operations expect them pairwise edge-disjoint.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathSystem {
    pub paths: Vec<Path>,
}

impl PathSystem {
    pub fn new(paths: Vec<Path>) -> Self {
        PathSystem { paths }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Path> {
        self.paths.iter()
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.paths.iter().flat_map(|p| p.edges.iter().copied()).collect()
    }

    pub fn is_edge_disjoint(&self) -> bool {
        let mut seen = EdgeSet::new();
        self.paths
            .iter()
            .flat_map(|p| p.edges.iter())
            .all(|e| seen.insert(*e))
    }

    /// δ_𝒫(v): the edges of the system incident with `v`.
    pub fn delta_at(&self, g: &Multigraph, v: VertexId) -> EdgeSet {
        self.paths
            .iter()
            .flat_map(|p| p.edges.iter())
            .filter(|e| g.other_end(**e, v).is_some())
            .copied()
            .collect()
    }

    /// Indices of the paths with `v` as an end-vertex.
    pub fn ending_at(&self, v: VertexId) -> Vec<usize> {
        self.paths
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_empty() && (p.first() == v || p.last() == v))
            .map(|(i, _)| i)
            .collect()
    }

    /// Which path uses each edge.
    pub fn owner_map(&self) -> BTreeMap<EdgeId, usize> {
        let mut out = BTreeMap::new();
        for (i, p) in self.paths.iter().enumerate() {
            for e in &p.edges {
                out.insert(*e, i);
            }
        }
        out
    }

    /// Every path is simple in `g` and no edge is shared.
    pub fn check(&self, g: &Multigraph) -> Result<(), (usize, PathDefect)> {
        for (i, p) in self.paths.iter().enumerate() {
            p.check(g).map_err(|d| (i, d))?;
        }
        Ok(())
    }
}

impl FromIterator<Path> for PathSystem {
    fn from_iter<I: IntoIterator<Item = Path>>(iter: I) -> Self {
        PathSystem {
            paths: iter.into_iter().collect(),
        }
    }
}

/// Splits a walk into cycles (closed sub-walks found at repeated vertices)
/// and the simple path that remains.
pub(crate) fn shortcut_walk(walk: &Path) -> (Path, Vec<Path>) {
    let mut stack = Path::trivial(walk.first());
    let mut cycles = Vec::new();
    for (i, e) in walk.edges.iter().enumerate() {
        let next = walk.vertices[i + 1];
        if let Some(pos) = stack.vertices.iter().position(|v| *v == next) {
            let mut cycle = Path {
                vertices: stack.vertices[pos..].to_vec(),
                edges: stack.edges[pos..].to_vec(),
            };
            cycle.vertices.push(next);
            cycle.edges.push(*e);
            stack.vertices.truncate(pos + 1);
            stack.edges.truncate(pos);
            cycles.push(cycle);
        } else {
            stack.vertices.push(next);
            stack.edges.push(*e);
        }
    }
    (stack, cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortcut_removes_detour() {
        let walk = Path {
            vertices: [0, 1, 2, 1, 3].map(VertexId).to_vec(),
            edges: [10, 11, 12, 13].map(EdgeId).to_vec(),
        };
        let (path, cycles) = shortcut_walk(&walk);
        assert_eq!(path.vertices, [0, 1, 3].map(VertexId).to_vec());
        assert_eq!(path.edges, [10, 13].map(EdgeId).to_vec());
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].edges, [11, 12].map(EdgeId).to_vec());
    }

    #[test]
    fn t_path_rejects_inner_terminal() {
        let g = Multigraph::from_named(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let t = TerminalSet::from_names(&g, &["a", "b", "c"]).unwrap();
        let p = Path {
            vertices: vec![VertexId(0), VertexId(1), VertexId(2)],
            edges: vec![EdgeId(1), EdgeId(2)],
        };
        assert!(p.check(&g).is_ok());
        assert_eq!(p.check_t_path(&g, &t), Err(PathDefect::NotTPath));
    }
}
