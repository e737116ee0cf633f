//! Integer max-flow on small directed networks, and the unit-capacity
//! undirected edge flow between two vertex sets built on top of it.

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, Multigraph, VertexId, VertexSet};
use crate::path::{Path, PathSystem};
use std::collections::{BTreeMap, VecDeque};

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: i64,
    flow: i64,
}

/// Arcs are stored in pairs: `a` and its residual twin `a ^ 1`.
#[derive(Clone, Debug, Default)]
pub(crate) struct Network {
    adj: Vec<Vec<usize>>,
    arcs: Vec<Arc>,
}

impl Network {
    pub fn with_nodes(n: usize) -> Self {
        Network {
            adj: vec![Vec::new(); n],
            arcs: Vec::new(),
        }
    }

    pub fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap, flow: 0 });
        self.arcs.push(Arc {
            to: from,
            cap: 0,
            flow: 0,
        });
        self.adj[from].push(id);
        self.adj[to].push(id + 1);
        id
    }

    fn residual(&self, a: usize) -> i64 {
        self.arcs[a].cap - self.arcs[a].flow
    }

    pub fn push(&mut self, a: usize, amount: i64) {
        self.arcs[a].flow += amount;
        self.arcs[a ^ 1].flow -= amount;
    }

    pub fn flow(&self, a: usize) -> i64 {
        self.arcs[a].flow
    }

    /// One shortest augmenting path, scanning arcs in insertion order.
    pub fn augment(&mut self, s: usize, t: usize) -> Option<i64> {
        let n = self.adj.len();
        let mut pred: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for &a in &self.adj[x] {
                let y = self.arcs[a].to;
                if !seen[y] && self.residual(a) > 0 {
                    seen[y] = true;
                    pred[y] = Some(a);
                    queue.push_back(y);
                }
            }
        }
        if !seen[t] || s == t {
            return None;
        }
        let mut bottleneck = i64::MAX;
        let mut at = t;
        while let Some(a) = pred[at] {
            bottleneck = bottleneck.min(self.residual(a));
            at = self.arcs[a ^ 1].to;
        }
        let mut at = t;
        while let Some(a) = pred[at] {
            self.push(a, bottleneck);
            at = self.arcs[a ^ 1].to;
        }
        Some(bottleneck)
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        while let Some(x) = self.augment(s, t) {
            total += x;
        }
        total
    }

    /// Nodes reachable from `s` in the residual network.
    pub fn reachable_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.adj[x] {
                let y = self.arcs[a].to;
                if !seen[y] && self.residual(a) > 0 {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Nodes from which `t` is reachable in the residual network.
    pub fn reaching(&self, t: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[t] = true;
        let mut queue = VecDeque::from([t]);
        while let Some(x) = queue.pop_front() {
            for &b in &self.adj[x] {
                let a = b ^ 1;
                let y = self.arcs[b].to;
                if !seen[y] && self.residual(a) > 0 {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}

pub(crate) const SOURCE: usize = 0;
pub(crate) const SINK: usize = 1;

struct FlowEdge {
    id: EdgeId,
    ends: [VertexId; 2],
    nodes: [usize; 2],
    /// Arc from `nodes[0]` to `nodes[1]` and back.
    arcs: [usize; 2],
}

/// Unit-capacity undirected flow between vertex sets A and B, with A and B
/// each contracted to one node. Edges inside A or inside B are ignored.
pub(crate) struct EdgeFlow<'g> {
    g: &'g Multigraph,
    a: VertexSet,
    b: VertexSet,
    node_of: BTreeMap<VertexId, usize>,
    vertex_of: Vec<Option<VertexId>>,
    edges: Vec<FlowEdge>,
    index_of: BTreeMap<EdgeId, usize>,
    net: Network,
}

impl<'g> EdgeFlow<'g> {
    pub fn new(g: &'g Multigraph, a: &VertexSet, b: &VertexSet) -> Result<Self> {
        for v in a.iter().chain(b) {
            if !g.has_vertex(*v) {
                return Err(Error::UnknownVertex(*v));
            }
        }
        if let Some(v) = a.intersection(b).next() {
            return Err(Error::OverlappingEndpoints(*v));
        }
        let mut node_of = BTreeMap::new();
        let mut vertex_of = vec![None, None];
        for v in g.vertices() {
            let node = if a.contains(&v) {
                SOURCE
            } else if b.contains(&v) {
                SINK
            } else {
                vertex_of.push(Some(v));
                vertex_of.len() - 1
            };
            node_of.insert(v, node);
        }
        let mut net = Network::with_nodes(vertex_of.len());
        let mut edges = Vec::new();
        let mut index_of = BTreeMap::new();
        for (id, ends) in g.edges() {
            let nodes = ends.map(|v| node_of[&v]);
            if nodes[0] == nodes[1] {
                continue;
            }
            let fwd = net.add_arc(nodes[0], nodes[1], 1);
            let bwd = net.add_arc(nodes[1], nodes[0], 1);
            index_of.insert(id, edges.len());
            edges.push(FlowEdge {
                id,
                ends,
                nodes,
                arcs: [fwd, bwd],
            });
        }
        Ok(EdgeFlow {
            g,
            a: a.clone(),
            b: b.clone(),
            node_of,
            vertex_of,
            edges,
            index_of,
            net,
        })
    }

    fn net_flow(&self, i: usize) -> i64 {
        let e = &self.edges[i];
        self.net.flow(e.arcs[0]) - self.net.flow(e.arcs[1])
    }

    /// Loads an existing AB-path system as the current flow.
    pub fn load(&mut self, paths: &PathSystem) -> Result<()> {
        if !paths.is_edge_disjoint() {
            return Err(Error::InvalidPaths("paths share an edge".into()));
        }
        for p in &paths.paths {
            if let Err(d) = p.check(self.g) {
                return Err(Error::InvalidPaths(d.to_string()));
            }
            let p = if self.a.contains(&p.first()) && self.b.contains(&p.last()) {
                p.clone()
            } else if self.b.contains(&p.first()) && self.a.contains(&p.last()) {
                p.reversed()
            } else {
                return Err(Error::InvalidPaths("path does not join A and B".into()));
            };
            let inner = &p.vertices[1..p.vertices.len() - 1];
            if inner.iter().any(|v| self.a.contains(v) || self.b.contains(v)) {
                return Err(Error::InvalidPaths("path has an internal vertex in A or B".into()));
            }
            for (k, e) in p.edges.iter().enumerate() {
                let i = self.index_of[e];
                let from = self.node_of[&p.vertices[k]];
                let arc = if self.edges[i].nodes[0] == from {
                    self.edges[i].arcs[0]
                } else {
                    self.edges[i].arcs[1]
                };
                self.net.push(arc, 1);
            }
        }
        Ok(())
    }

    pub fn augment(&mut self) -> bool {
        self.net.augment(SOURCE, SINK).is_some()
    }

    pub fn run(&mut self) -> usize {
        self.net.max_flow(SOURCE, SINK) as usize
    }

    fn expand(&self, reached: &[bool]) -> VertexSet {
        self.g
            .vertices()
            .filter(|v| reached[self.node_of[v]])
            .collect()
    }

    /// Side of the ⪯-smallest minimum cut: residual-reachable from A.
    pub fn smallest_side(&self) -> VertexSet {
        self.expand(&self.net.reachable_from(SOURCE))
    }

    /// Side of the ⪯-largest minimum cut: everything that cannot reach B.
    pub fn largest_side(&self) -> VertexSet {
        let reaching = self.net.reaching(SINK);
        let not: Vec<bool> = reaching.iter().map(|r| !r).collect();
        self.expand(&not)
    }

    /// Decomposes the current flow into AB-paths, discarding flow cycles.
    pub fn paths(&self) -> PathSystem {
        let mut out: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for i in 0..self.edges.len() {
            let f = self.net_flow(i);
            let [x, y] = self.edges[i].nodes;
            match f {
                1 => out.entry(x).or_default().push((i, y)),
                -1 => out.entry(y).or_default().push((i, x)),
                _ => {}
            }
        }
        let mut result = Vec::new();
        loop {
            // walk from the source; `stack` holds (node, edge used to enter it)
            let mut stack: Vec<(usize, Option<usize>)> = vec![(SOURCE, None)];
            let mut at = SOURCE;
            let mut finished = false;
            while let Some(list) = out.get_mut(&at) {
                if list.is_empty() {
                    break;
                }
                let (i, next) = list.remove(0);
                if let Some(pos) = stack.iter().position(|(n, _)| *n == next) {
                    stack.truncate(pos + 1);
                } else {
                    stack.push((next, Some(i)));
                }
                at = next;
                if at == SINK {
                    finished = true;
                    break;
                }
            }
            if !finished {
                break;
            }
            result.push(self.to_path(&stack));
        }
        PathSystem::new(result)
    }

    fn to_path(&self, stack: &[(usize, Option<usize>)]) -> Path {
        let edges: Vec<usize> = stack.iter().filter_map(|(_, e)| *e).collect();
        let first = &self.edges[edges[0]];
        let start = if self.node_of[&first.ends[0]] == SOURCE {
            first.ends[0]
        } else {
            first.ends[1]
        };
        let mut path = Path::trivial(start);
        for (k, i) in edges.iter().enumerate() {
            let fe = &self.edges[*i];
            let node = stack[k + 1].0;
            let v = match self.vertex_of[node] {
                Some(v) => v,
                None => {
                    if self.node_of[&fe.ends[0]] == node {
                        fe.ends[0]
                    } else {
                        fe.ends[1]
                    }
                }
            };
            path.vertices.push(v);
            path.edges.push(fe.id);
        }
        path
    }
}
