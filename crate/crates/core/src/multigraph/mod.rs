//! Finite undirected multigraphs without loops.
//!
//! Edges carry stable integer identifiers: contraction and deletion never
//! renumber a surviving edge, and new edges (from splitting off) always take
//! a fresh id above every id the graph has ever used. All iteration is in
//! ascending id order, which makes every algorithm in the crate deterministic.

mod euler;
mod random;
mod text;

pub use euler::{eulerian_decomposition, EulerPart};
pub use random::{random_inner_eulerian, SizeBounds};
pub use text::{parse_graph, write_graph};

use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub type VertexSet = BTreeSet<VertexId>;
pub type EdgeSet = BTreeSet<EdgeId>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    names: BTreeMap<VertexId, String>,
    edges: BTreeMap<EdgeId, [VertexId; 2]>,
    incidence: BTreeMap<VertexId, EdgeSet>,
    next_edge: u32,
}

impl Default for Multigraph {
    fn default() -> Self {
        Self::new()
    }
}

impl Multigraph {
    pub fn new() -> Self {
        Multigraph {
            names: BTreeMap::new(),
            edges: BTreeMap::new(),
            incidence: BTreeMap::new(),
            next_edge: 1,
        }
    }

    /// Builds a graph from vertex names and name pairs; edges get ids `1..`.
    pub fn from_named(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let mut g = Multigraph::new();
        for name in vertices {
            g.add_vertex(name)?;
        }
        for (u, v) in edges {
            let u = g.vertex_by_name(u)?;
            let v = g.vertex_by_name(v)?;
            g.push_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId> {
        if self.names.values().any(|n| n == name) {
            return Err(Error::DuplicateVertex(name.to_owned()));
        }
        let id = VertexId(self.names.keys().next_back().map_or(0, |v| v.0 + 1));
        self.names.insert(id, name.to_owned());
        self.incidence.insert(id, EdgeSet::new());
        Ok(id)
    }

    pub fn add_edge(&mut self, id: EdgeId, u: VertexId, v: VertexId) -> Result<()> {
        if self.edges.contains_key(&id) {
            return Err(Error::DuplicateEdge(id));
        }
        for x in [u, v] {
            if !self.names.contains_key(&x) {
                return Err(Error::UnknownVertex(x));
            }
        }
        if u == v {
            return Err(Error::Loop(id));
        }
        self.edges.insert(id, [u.min(v), u.max(v)]);
        self.incidence.get_mut(&u).unwrap().insert(id);
        self.incidence.get_mut(&v).unwrap().insert(id);
        self.next_edge = self.next_edge.max(id.0 + 1);
        Ok(())
    }

    /// Adds an edge with a fresh id.
    pub fn push_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        let id = EdgeId(self.next_edge);
        self.add_edge(id, u, v)?;
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.names.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.names.keys().copied().collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, [VertexId; 2])> + '_ {
        self.edges.iter().map(|(e, ends)| (*e, *ends))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges.keys().copied().collect()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.names.contains_key(&v)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn name(&self, v: VertexId) -> &str {
        self.names.get(&v).map_or("?", String::as_str)
    }

    pub fn vertex_by_name(&self, name: &str) -> Result<VertexId> {
        self.names
            .iter()
            .find(|(_, n)| n.as_str() == name)
            .map(|(v, _)| *v)
            .ok_or_else(|| Error::UnknownVertexName(name.to_owned()))
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<[VertexId; 2]> {
        self.edges.get(&e).copied().ok_or(Error::UnknownEdge(e))
    }

    /// The endpoint of `e` that is not `v`; `None` if `e` is not incident with `v`.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> Option<VertexId> {
        let [a, b] = *self.edges.get(&e)?;
        if a == v {
            Some(b)
        } else if b == v {
            Some(a)
        } else {
            None
        }
    }

    pub fn incident(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.incidence.get(&v).into_iter().flatten().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn neighbors(&self, v: VertexId) -> VertexSet {
        self.incident(v)
            .filter_map(|e| self.other_end(e, v))
            .collect()
    }

    fn check_vertices<'a>(&self, xs: impl IntoIterator<Item = &'a VertexId>) -> Result<()> {
        for v in xs {
            if !self.has_vertex(*v) {
                return Err(Error::UnknownVertex(*v));
            }
        }
        Ok(())
    }

    /// δ(X): the edges with exactly one endpoint in `x`.
    pub fn boundary(&self, x: &VertexSet) -> Result<EdgeSet> {
        self.check_vertices(x)?;
        Ok(self.boundary_unchecked(x))
    }

    pub(crate) fn boundary_unchecked(&self, x: &VertexSet) -> EdgeSet {
        let mut out = EdgeSet::new();
        for v in x {
            for e in self.incident(*v) {
                let w = self.other_end(e, *v).unwrap();
                if !x.contains(&w) {
                    out.insert(e);
                }
            }
        }
        out
    }

    /// d(X) = |δ(X)|.
    pub fn boundary_degree(&self, x: &VertexSet) -> Result<usize> {
        self.boundary(x).map(|b| b.len())
    }

    /// Edges with both endpoints in `x`.
    pub fn inner_edges(&self, x: &VertexSet) -> EdgeSet {
        self.edges
            .iter()
            .filter(|(_, [a, b])| x.contains(a) && x.contains(b))
            .map(|(e, _)| *e)
            .collect()
    }

    pub fn without_edges(&self, removed: &EdgeSet) -> Multigraph {
        let mut g = self.clone();
        for e in removed {
            g.remove_edge(*e);
        }
        g
    }

    /// Same vertex set, only the edges in `keep`.
    pub fn edge_subgraph(&self, keep: &EdgeSet) -> Multigraph {
        let mut g = self.clone();
        let drop: Vec<_> = self.edge_ids().filter(|e| !keep.contains(e)).collect();
        for e in drop {
            g.remove_edge(e);
        }
        g
    }

    pub(crate) fn remove_edge(&mut self, e: EdgeId) -> Option<[VertexId; 2]> {
        let ends = self.edges.remove(&e)?;
        for v in ends {
            if let Some(inc) = self.incidence.get_mut(&v) {
                inc.remove(&e);
            }
        }
        Some(ends)
    }

    pub(crate) fn remove_vertex(&mut self, v: VertexId) {
        let inc: Vec<_> = self.incident(v).collect();
        for e in inc {
            self.remove_edge(e);
        }
        self.names.remove(&v);
        self.incidence.remove(&v);
    }

    /// G/ℱ: contracts each part onto its root and drops edges that become loops.
    pub fn contract(&self, family: &ContractionFamily) -> Result<Multigraph> {
        let mut owner: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        for (root, part) in &family.parts {
            self.check_vertices(part)?;
            if !part.contains(root) || family.parts.keys().any(|r| r != root && part.contains(r)) {
                return Err(Error::BadPart(*root));
            }
            for v in part {
                if owner.insert(*v, *root).is_some() {
                    return Err(Error::OverlappingParts(*v));
                }
            }
        }
        let image = |v: VertexId| owner.get(&v).copied().unwrap_or(v);
        let mut g = Multigraph {
            names: BTreeMap::new(),
            edges: BTreeMap::new(),
            incidence: BTreeMap::new(),
            next_edge: self.next_edge,
        };
        for (v, name) in &self.names {
            if image(*v) == *v {
                g.names.insert(*v, name.clone());
                g.incidence.insert(*v, EdgeSet::new());
            }
        }
        for (e, [a, b]) in &self.edges {
            let (a, b) = (image(*a), image(*b));
            if a != b {
                g.edges.insert(*e, [a.min(b), a.max(b)]);
                g.incidence.get_mut(&a).unwrap().insert(*e);
                g.incidence.get_mut(&b).unwrap().insert(*e);
            }
        }
        Ok(g)
    }

    /// Contracts a single set onto `root`.
    pub fn contract_set(&self, root: VertexId, part: &VertexSet) -> Result<Multigraph> {
        let mut family = ContractionFamily::default();
        family.insert(root, part.clone());
        self.contract(&family)
    }

    pub fn component_of(&self, v: VertexId) -> VertexSet {
        self.reach(v, |_| true)
    }

    /// Vertices reachable from `v` using only edges accepted by `usable`.
    pub(crate) fn reach(&self, v: VertexId, usable: impl Fn(EdgeId) -> bool) -> VertexSet {
        let mut seen = VertexSet::new();
        if !self.has_vertex(v) {
            return seen;
        }
        let mut queue = VecDeque::from([v]);
        seen.insert(v);
        while let Some(x) = queue.pop_front() {
            for e in self.incident(x) {
                if !usable(e) {
                    continue;
                }
                let y = self.other_end(e, x).unwrap();
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if !seen.contains(&v) {
                let c = self.component_of(v);
                seen.extend(c.iter().copied());
                out.push(c);
            }
        }
        out
    }

    /// Components of the induced subgraph `G[x]`.
    pub fn induced_components(&self, x: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for v in x {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VertexSet::from([*v]);
            let mut queue = VecDeque::from([*v]);
            while let Some(a) = queue.pop_front() {
                for e in self.incident(a) {
                    let b = self.other_end(e, a).unwrap();
                    if x.contains(&b) && comp.insert(b) {
                        queue.push_back(b);
                    }
                }
            }
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Checks that every non-terminal has even degree; the error carries one
    /// odd-degree inner vertex, i.e. a singleton X ⊆ V∖T with d(X) odd.
    pub fn is_inner_eulerian(&self, terminals: &TerminalSet) -> std::result::Result<(), OddVertex> {
        match self
            .vertices()
            .find(|v| !terminals.contains(*v) && self.degree(*v) % 2 == 1)
        {
            Some(vertex) => Err(OddVertex {
                vertex,
                degree: self.degree(vertex),
            }),
            None => Ok(()),
        }
    }

    pub(crate) fn require_inner_eulerian(&self, terminals: &TerminalSet) -> Result<()> {
        self.is_inner_eulerian(terminals)
            .map_err(|odd| Error::NotInnerEulerian {
                vertex: odd.vertex,
                degree: odd.degree,
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OddVertex {
    pub vertex: VertexId,
    pub degree: usize,
}

/// A subset T of the vertices, iterated in ascending id order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TerminalSet(VertexSet);

impl TerminalSet {
    pub fn new(g: &Multigraph, terminals: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let set: VertexSet = terminals.into_iter().collect();
        g.check_vertices(&set)?;
        Ok(TerminalSet(set))
    }

    pub fn from_names(g: &Multigraph, names: &[&str]) -> Result<Self> {
        let ids = names
            .iter()
            .map(|n| g.vertex_by_name(n))
            .collect::<Result<Vec<_>>>()?;
        TerminalSet::new(g, ids)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_set(&self) -> &VertexSet {
        &self.0
    }

    /// T − t.
    pub fn others(&self, t: VertexId) -> VertexSet {
        self.0.iter().copied().filter(|x| *x != t).collect()
    }

    pub(crate) fn require(&self, t: VertexId) -> Result<()> {
        if self.contains(t) {
            Ok(())
        } else {
            Err(Error::NotTerminal(t))
        }
    }
}

/// An edge set C = δ(X) together with its designated side X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    pub edges: EdgeSet,
    pub side: VertexSet,
    pub minimal: bool,
}

impl Cut {
    /// δ(side), with the minimality flag left unset.
    pub fn of_side(g: &Multigraph, side: VertexSet) -> Result<Cut> {
        let edges = g.boundary(&side)?;
        Ok(Cut {
            edges,
            side,
            minimal: false,
        })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// ℱ = {X_u : u ∈ U}: pairwise disjoint parts, each containing its root.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ContractionFamily {
    pub parts: BTreeMap<VertexId, VertexSet>,
}

impl ContractionFamily {
    pub fn insert(&mut self, root: VertexId, part: VertexSet) {
        self.parts.insert(root, part);
    }
}
