//! Mader's min-max formula for edge-disjoint T-paths: T-partitions,
//! obstructive components, an exhaustive dual minimiser, a brute-force
//! packing oracle and the complementary slackness conditions.

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, EdgeSet, Multigraph, TerminalSet, VertexId, VertexSet};
use crate::path::{Path, PathSystem};
use num_rational::Ratio;
use std::collections::{BTreeMap, VecDeque};

/// Largest number of non-terminals `mader_min` will enumerate over.
pub const MADER_MAX_INNER: usize = 10;
/// Largest edge count `brute_force_max_packing` accepts.
pub const BRUTE_FORCE_MAX_EDGES: usize = 24;

/// {X_t : t ∈ T}: pairwise disjoint sets with X_t ∩ T = {t}.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TPartition {
    pub parts: BTreeMap<VertexId, VertexSet>,
}

impl TPartition {
    /// Every X_t = {t}.
    pub fn singletons(t: &TerminalSet) -> TPartition {
        TPartition {
            parts: t.iter().map(|x| (x, VertexSet::from([x]))).collect(),
        }
    }

    pub fn validate(&self, g: &Multigraph, t: &TerminalSet) -> Result<()> {
        let mut seen = VertexSet::new();
        for x in t.iter() {
            let part = self.parts.get(&x).ok_or(Error::BadPart(x))?;
            if !part.contains(&x) || part.iter().any(|v| *v != x && t.contains(*v)) {
                return Err(Error::BadPart(x));
            }
            for v in part {
                if !g.has_vertex(*v) {
                    return Err(Error::UnknownVertex(*v));
                }
                if !seen.insert(*v) {
                    return Err(Error::OverlappingParts(*v));
                }
            }
        }
        if let Some(extra) = self.parts.keys().find(|k| !t.contains(**k)) {
            return Err(Error::NotTerminal(*extra));
        }
        Ok(())
    }

    pub fn covered(&self) -> VertexSet {
        self.parts.values().flatten().copied().collect()
    }

    /// Components of G − ⋃𝒜.
    pub fn free_components(&self, g: &Multigraph) -> Vec<VertexSet> {
        let covered = self.covered();
        let rest: VertexSet = g.vertices().filter(|v| !covered.contains(v)).collect();
        g.induced_components(&rest)
    }

    /// E(𝒜) = ⋃ δ(X_t).
    pub fn boundary_edges(&self, g: &Multigraph) -> EdgeSet {
        self.parts.values().flat_map(|p| g.boundary_unchecked(p)).collect()
    }

    fn owner(&self) -> BTreeMap<VertexId, VertexId> {
        self.parts
            .iter()
            .flat_map(|(t, p)| p.iter().map(move |v| (*v, *t)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub vertices: VertexSet,
    pub degree: usize,
    /// d(Y) is odd.
    pub obstructive: bool,
    /// Vertices of Y with an odd number of edges leaving Y.
    pub odd_attachments: VertexSet,
    /// No edge-disjoint cycles cover δ(v) after contracting V − Y to v.
    pub obstructive_extended: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub components: Vec<ComponentReport>,
}

impl ObstructionReport {
    /// o(G, 𝒜).
    pub fn count(&self) -> usize {
        self.components.iter().filter(|c| c.obstructive).count()
    }
}

/// A J-join of the connected graph G[Y] built from a spanning tree, if one exists.
fn j_join(g: &Multigraph, y: &VertexSet, j: &VertexSet) -> Option<EdgeSet> {
    let root = *y.first()?;
    let mut parent: BTreeMap<VertexId, (VertexId, EdgeId)> = BTreeMap::new();
    let mut order = vec![root];
    let mut seen = VertexSet::from([root]);
    let mut queue = VecDeque::from([root]);
    while let Some(a) = queue.pop_front() {
        for e in g.incident(a) {
            let b = g.other_end(e, a).unwrap();
            if y.contains(&b) && seen.insert(b) {
                parent.insert(b, (a, e));
                order.push(b);
                queue.push_back(b);
            }
        }
    }
    let mut odd: BTreeMap<VertexId, bool> = y.iter().map(|v| (*v, j.contains(v))).collect();
    let mut join = EdgeSet::new();
    for v in order.iter().rev() {
        if let Some(&(p, e)) = parent.get(v) {
            if odd[v] {
                join.insert(e);
                *odd.get_mut(&p).unwrap() ^= true;
            }
        }
    }
    if odd[&root] {
        return None;
    }
    Some(join)
}

/// Classifies every component of G − ⋃𝒜 by both obstruction criteria.
pub fn obstructive_components(g: &Multigraph, t: &TerminalSet, a: &TPartition) -> Result<ObstructionReport> {
    a.validate(g, t)?;
    let mut components = Vec::new();
    for y in a.free_components(g) {
        let boundary = g.boundary_unchecked(&y);
        let mut attach: BTreeMap<VertexId, usize> = BTreeMap::new();
        for e in &boundary {
            let [p, q] = g.endpoints(*e)?;
            let inside = if y.contains(&p) { p } else { q };
            *attach.entry(inside).or_default() += 1;
        }
        let odd_attachments: VertexSet = attach.iter().filter(|(_, c)| *c % 2 == 1).map(|(v, _)| *v).collect();
        let covered = boundary.len().is_multiple_of(2)
            && j_join(g, &y, &odd_attachments).is_some_and(|join| {
                // δ(Y) plus the join is an even subgraph, hence a union of cycles
                y.iter().all(|v| {
                    let inner = g.incident(*v).filter(|e| join.contains(e)).count();
                    (inner + attach.get(v).copied().unwrap_or(0)) % 2 == 0
                })
            });
        components.push(ComponentReport {
            degree: boundary.len(),
            obstructive: boundary.len() % 2 == 1,
            obstructive_extended: !covered,
            odd_attachments,
            vertices: y,
        });
    }
    Ok(ObstructionReport { components })
}

/// ½(Σ_t d(X_t) − o(G, 𝒜)).
pub fn mader_bound(g: &Multigraph, t: &TerminalSet, a: &TPartition) -> Result<Ratio<i64>> {
    let report = obstructive_components(g, t, a)?;
    let total: usize = a.parts.values().map(|p| g.boundary_unchecked(p).len()).sum();
    Ok(Ratio::new(total as i64 - report.count() as i64, 2))
}

/// Every T-partition, as assignments of each non-terminal (ascending) to
/// "free" or to one terminal (ascending).
pub fn t_partitions(g: &Multigraph, t: &TerminalSet) -> impl Iterator<Item = TPartition> {
    let inner: Vec<VertexId> = g.vertices().filter(|v| !t.contains(*v)).collect();
    let terms: Vec<VertexId> = t.iter().collect();
    let base = terms.len() + 1;
    let total = base.checked_pow(inner.len() as u32).unwrap_or(usize::MAX);
    let single = TPartition::singletons(t);
    (0..total).map(move |mut code| {
        let mut a = single.clone();
        for v in &inner {
            let digit = code % base;
            code /= base;
            if digit > 0 {
                a.parts.get_mut(&terms[digit - 1]).unwrap().insert(*v);
            }
        }
        a
    })
}

/// The exact minimum of the Mader bound with its first minimiser.
pub fn mader_min(g: &Multigraph, t: &TerminalSet) -> Result<(Ratio<i64>, TPartition)> {
    let inner = g.vertex_count() - t.len();
    if inner > MADER_MAX_INNER {
        return Err(Error::TooLarge {
            what: "non-terminal count",
            got: inner,
            limit: MADER_MAX_INNER,
        });
    }
    let mut best: Option<(Ratio<i64>, TPartition)> = None;
    for a in t_partitions(g, t) {
        let value = mader_bound(g, t, &a)?;
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, a));
        }
    }
    Ok(best.expect("there is at least one T-partition"))
}

/// Every T-path of `g`, each once, oriented from its smaller terminal.
pub fn t_paths(g: &Multigraph, t: &TerminalSet) -> Vec<Path> {
    fn dfs(g: &Multigraph, t: &TerminalSet, cur: &mut Path, out: &mut Vec<Path>) {
        let v = cur.last();
        if !cur.is_empty() && t.contains(v) {
            if v > cur.first() {
                out.push(cur.clone());
            }
            return;
        }
        for e in g.incident(v).collect::<Vec<_>>() {
            let w = g.other_end(e, v).unwrap();
            if cur.vertices.contains(&w) {
                continue;
            }
            cur.vertices.push(w);
            cur.edges.push(e);
            dfs(g, t, cur, out);
            cur.vertices.pop();
            cur.edges.pop();
        }
    }
    let mut out = Vec::new();
    for s in t.iter() {
        dfs(g, t, &mut Path::trivial(s), &mut out);
    }
    out
}

struct Packer {
    /// Candidate paths grouped by their lowest edge index.
    groups: Vec<Vec<(u64, usize)>>,
    terminal_masks: Vec<u64>,
    best: Vec<usize>,
    all: Option<Vec<Vec<usize>>>,
    /// Record every system, not only the largest ones.
    every: bool,
}

impl Packer {
    fn new(g: &Multigraph, t: &TerminalSet, paths: &[Path]) -> Packer {
        let index: BTreeMap<EdgeId, usize> = g.edge_ids().enumerate().map(|(i, e)| (e, i)).collect();
        let mut groups = vec![Vec::new(); g.edge_count()];
        for (k, p) in paths.iter().enumerate() {
            let mask = p.edges.iter().fold(0u64, |m, e| m | 1 << index[e]);
            groups[mask.trailing_zeros() as usize].push((mask, k));
        }
        let terminal_masks = t
            .iter()
            .map(|x| g.incident(x).fold(0u64, |m, e| m | 1 << index[&e]))
            .collect();
        Packer {
            groups,
            terminal_masks,
            best: Vec::new(),
            all: None,
            every: false,
        }
    }

    fn bound(&self, used: u64, from: usize) -> usize {
        let upper = if from >= 64 { 0 } else { !0u64 << from };
        let ends: u32 = self.terminal_masks.iter().map(|m| (m & !used & upper).count_ones()).sum();
        ends as usize / 2
    }

    fn search(&mut self, i: usize, used: u64, chosen: &mut Vec<usize>) {
        let enough = match &self.all {
            Some(_) if self.every => true,
            Some(_) => chosen.len() + self.bound(used, i) >= self.best.len(),
            None => chosen.len() + self.bound(used, i) > self.best.len(),
        };
        if !enough {
            return;
        }
        if i == self.groups.len() {
            if self.every {
                self.all.as_mut().unwrap().push(chosen.clone());
                return;
            }
            if chosen.len() > self.best.len() {
                self.best = chosen.clone();
                if let Some(all) = &mut self.all {
                    all.clear();
                }
            }
            if let Some(all) = &mut self.all {
                if chosen.len() == self.best.len() {
                    all.push(chosen.clone());
                }
            }
            return;
        }
        if used & (1 << i) == 0 {
            for k in 0..self.groups[i].len() {
                let (mask, p) = self.groups[i][k];
                if mask & used == 0 {
                    chosen.push(p);
                    self.search(i + 1, used | mask, chosen);
                    chosen.pop();
                }
            }
        }
        self.search(i + 1, used, chosen);
    }
}

fn require_small(g: &Multigraph) -> Result<()> {
    if g.edge_count() > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::TooLarge {
            what: "edge count",
            got: g.edge_count(),
            limit: BRUTE_FORCE_MAX_EDGES,
        });
    }
    Ok(())
}

fn sorted_paths(g: &Multigraph, t: &TerminalSet) -> Vec<Path> {
    let mut paths = t_paths(g, t);
    paths.sort_by(|a, b| {
        let (mut x, mut y) = (a.edges.clone(), b.edges.clone());
        x.sort();
        y.sort();
        x.cmp(&y).then_with(|| a.cmp(b))
    });
    paths
}

/// A maximum edge-disjoint T-path system by exhaustive branch and bound.
pub fn brute_force_max_packing(g: &Multigraph, t: &TerminalSet) -> Result<PathSystem> {
    require_small(g)?;
    let paths = sorted_paths(g, t);
    let mut packer = Packer::new(g, t, &paths);
    packer.search(0, 0, &mut Vec::new());
    Ok(packer.best.iter().map(|k| paths[*k].clone()).collect())
}

/// Every maximum edge-disjoint T-path system.
pub fn all_maximum_packings(g: &Multigraph, t: &TerminalSet) -> Result<Vec<PathSystem>> {
    require_small(g)?;
    let paths = sorted_paths(g, t);
    let mut packer = Packer::new(g, t, &paths);
    packer.best = Vec::new();
    packer.all = Some(Vec::new());
    packer.search(0, 0, &mut Vec::new());
    Ok(packer
        .all
        .unwrap()
        .iter()
        .map(|ks| ks.iter().map(|k| paths[*k].clone()).collect())
        .collect())
}

/// Every edge-disjoint T-path system, the empty one included.
pub fn all_packings(g: &Multigraph, t: &TerminalSet) -> Result<Vec<PathSystem>> {
    require_small(g)?;
    let paths = sorted_paths(g, t);
    let mut packer = Packer::new(g, t, &paths);
    packer.all = Some(Vec::new());
    packer.every = true;
    packer.search(0, 0, &mut Vec::new());
    Ok(packer
        .all
        .unwrap()
        .iter()
        .map(|ks| ks.iter().map(|k| paths[*k].clone()).collect())
        .collect())
}

fn valid_system(g: &Multigraph, t: &TerminalSet, p: &PathSystem) -> bool {
    p.is_edge_disjoint() && p.iter().all(|x| x.is_t_path(g, t))
}

/// Clause (1): each path meets E(𝒜) in one edge between two parts, or in two
/// edges on the boundary of the same free component.
fn clause_one(g: &Multigraph, a: &TPartition, p: &PathSystem, boundary: &EdgeSet, comps: &[VertexSet]) -> bool {
    let owner = a.owner();
    let comp_of: BTreeMap<VertexId, usize> = comps
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.iter().map(move |v| (*v, i)))
        .collect();
    let free_side = |e: EdgeId| {
        let [x, y] = g.endpoints(e).unwrap();
        comp_of.get(&x).or(comp_of.get(&y)).copied()
    };
    p.iter().all(|path| {
        let hits: Vec<EdgeId> = path.edges.iter().copied().filter(|e| boundary.contains(e)).collect();
        match hits.as_slice() {
            [e] => {
                let [x, y] = g.endpoints(*e).unwrap();
                owner.contains_key(&x) && owner.contains_key(&y)
            }
            [e, f] => free_side(*e).is_some() && free_side(*e) == free_side(*f),
            _ => false,
        }
    })
}

/// The weak complementary slackness condition.
///
/// Clause (2) is read as: every edge of E(𝒜) joining two parts is used, and
/// the boundary of each free component has at most one unused edge.
pub fn check_condition_weak(g: &Multigraph, t: &TerminalSet, p: &PathSystem, a: &TPartition) -> bool {
    if !valid_system(g, t, p) || a.validate(g, t).is_err() {
        return false;
    }
    let boundary = a.boundary_edges(g);
    let comps = a.free_components(g);
    if !clause_one(g, a, p, &boundary, &comps) {
        return false;
    }
    let used = p.edge_set();
    let owner = a.owner();
    let between_parts_used = boundary.iter().all(|e| {
        let [x, y] = g.endpoints(*e).unwrap();
        !(owner.contains_key(&x) && owner.contains_key(&y)) || used.contains(e)
    });
    between_parts_used
        && comps
            .iter()
            .all(|y| g.boundary_unchecked(y).iter().filter(|e| !used.contains(e)).count() <= 1)
}

/// The strong condition: all of E(𝒜) is used except exactly one edge on the
/// boundary of each obstructive component.
pub fn check_condition_strong(g: &Multigraph, t: &TerminalSet, p: &PathSystem, a: &TPartition) -> bool {
    if !valid_system(g, t, p) || a.validate(g, t).is_err() {
        return false;
    }
    let boundary = a.boundary_edges(g);
    let comps = a.free_components(g);
    if !clause_one(g, a, p, &boundary, &comps) {
        return false;
    }
    let used = p.edge_set();
    let mut unused: EdgeSet = boundary.difference(&used).copied().collect();
    for y in &comps {
        let dy = g.boundary_unchecked(y);
        if dy.len() % 2 == 1 {
            let missing: Vec<_> = dy.iter().filter(|e| unused.contains(e)).copied().collect();
            if missing.len() != 1 {
                return false;
            }
            unused.remove(&missing[0]);
        }
    }
    unused.is_empty()
}

/// For finite systems: a valid packing of maximum size.
pub fn is_strongly_maximal(g: &Multigraph, t: &TerminalSet, p: &PathSystem) -> Result<bool> {
    Ok(valid_system(g, t, p) && p.len() == brute_force_max_packing(g, t)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(vs: &[&str], es: &[(&str, &str)], ts: &[&str]) -> (Multigraph, TerminalSet) {
        let g = Multigraph::from_named(vs, es).unwrap();
        let t = TerminalSet::from_names(&g, ts).unwrap();
        (g, t)
    }

    fn star() -> (Multigraph, TerminalSet) {
        named(&["c", "l1", "l2", "l3"], &[("c", "l1"), ("c", "l2"), ("c", "l3")], &["l1", "l2", "l3"])
    }

    fn triangle() -> (Multigraph, TerminalSet) {
        named(&["t1", "t2", "t3"], &[("t1", "t2"), ("t2", "t3"), ("t1", "t3")], &["t1", "t2", "t3"])
    }

    fn h_graph() -> (Multigraph, TerminalSet) {
        named(
            &["t1", "t2", "t3", "t4", "v", "w"],
            &[("t1", "v"), ("t2", "v"), ("v", "w"), ("v", "w"), ("w", "t3"), ("w", "t4")],
            &["t1", "t2", "t3", "t4"],
        )
    }

    fn k4() -> (Multigraph, TerminalSet) {
        named(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")],
            &["a", "b", "c", "d"],
        )
    }

    fn r(n: i64) -> Ratio<i64> {
        Ratio::from_integer(n)
    }

    #[test]
    fn obstruction_examples() {
        let (g, t) = star();
        let rep = obstructive_components(&g, &t, &TPartition::singletons(&t)).unwrap();
        assert_eq!(rep.components.len(), 1);
        assert_eq!(rep.components[0].degree, 3);
        assert_eq!(rep.count(), 1);
        assert!(rep.components[0].obstructive_extended);

        let (g, t) = h_graph();
        let rep = obstructive_components(&g, &t, &TPartition::singletons(&t)).unwrap();
        assert_eq!(rep.components.len(), 1);
        assert_eq!(rep.components[0].degree, 4);
        assert_eq!(rep.count(), 0);
        assert!(!rep.components[0].obstructive_extended);

        let mut all = TPartition::singletons(&t);
        let t1 = g.vertex_by_name("t1").unwrap();
        all.parts.get_mut(&t1).unwrap().extend([g.vertex_by_name("v").unwrap(), g.vertex_by_name("w").unwrap()]);
        assert!(obstructive_components(&g, &t, &all).unwrap().components.is_empty());
    }

    #[test]
    fn invalid_partitions_rejected() {
        let (g, t) = star();
        let mut a = TPartition::singletons(&t);
        let l1 = g.vertex_by_name("l1").unwrap();
        a.parts.get_mut(&l1).unwrap().insert(g.vertex_by_name("l2").unwrap());
        assert_eq!(obstructive_components(&g, &t, &a), Err(Error::BadPart(l1)));
        let mut b = TPartition::singletons(&t);
        let c = g.vertex_by_name("c").unwrap();
        b.parts.get_mut(&l1).unwrap().insert(c);
        b.parts.get_mut(&g.vertex_by_name("l2").unwrap()).unwrap().insert(c);
        assert_eq!(b.validate(&g, &t), Err(Error::OverlappingParts(c)));
    }

    #[test]
    fn bound_examples() {
        let (g, t) = star();
        assert_eq!(mader_bound(&g, &t, &TPartition::singletons(&t)).unwrap(), r(1));
        let (g, t) = triangle();
        assert_eq!(mader_bound(&g, &t, &TPartition::singletons(&t)).unwrap(), r(3));
        let (g, t) = h_graph();
        assert_eq!(mader_bound(&g, &t, &TPartition::singletons(&t)).unwrap(), r(2));
    }

    #[test]
    fn min_examples() {
        let (g, t) = star();
        assert_eq!(t_partitions(&g, &t).count(), 4);
        assert_eq!(mader_min(&g, &t).unwrap().0, r(1));
        let (g, t) = triangle();
        assert_eq!(mader_min(&g, &t).unwrap().0, r(3));
        let (g, t) = named(&["t1", "v", "t2"], &[("t1", "v"), ("v", "t2")], &["t1", "t2"]);
        assert_eq!(mader_min(&g, &t).unwrap().0, r(1));
    }

    #[test]
    fn brute_force_examples() {
        let (g, t) = star();
        assert_eq!(brute_force_max_packing(&g, &t).unwrap().len(), 1);
        let (g, t) = triangle();
        assert_eq!(brute_force_max_packing(&g, &t).unwrap().len(), 3);
        let (g, t) = k4();
        let p = brute_force_max_packing(&g, &t).unwrap();
        assert_eq!(p.len(), 6);
        assert!(p.iter().all(|x| x.len() == 1));
        assert_eq!(all_maximum_packings(&g, &t).unwrap().len(), 1);
        let (g, t) = star();
        assert_eq!(all_maximum_packings(&g, &t).unwrap().len(), 3);
    }

    #[test]
    fn condition_examples() {
        let (g, t) = star();
        let a = TPartition::singletons(&t);
        let p = brute_force_max_packing(&g, &t).unwrap();
        assert!(check_condition_weak(&g, &t, &p, &a));
        assert!(check_condition_strong(&g, &t, &p, &a));
        assert!(!check_condition_weak(&g, &t, &PathSystem::default(), &a));

        let (g, t) = triangle();
        let a = TPartition::singletons(&t);
        let p = brute_force_max_packing(&g, &t).unwrap();
        assert!(check_condition_weak(&g, &t, &p, &a));
        assert!(check_condition_strong(&g, &t, &p, &a));

        let (g, t) = h_graph();
        let a = TPartition::singletons(&t);
        let one = PathSystem::new(vec![brute_force_max_packing(&g, &t).unwrap().paths[0].clone()]);
        assert!(!check_condition_strong(&g, &t, &one, &a));
    }

    #[test]
    fn strong_maximality_examples() {
        let (g, t) = k4();
        let p = brute_force_max_packing(&g, &t).unwrap();
        assert!(is_strongly_maximal(&g, &t, &p).unwrap());
        let fewer = PathSystem::new(p.paths[1..].to_vec());
        assert!(!is_strongly_maximal(&g, &t, &fewer).unwrap());
        let (g, t) = named(&["a", "b"], &[], &["a", "b"]);
        assert!(is_strongly_maximal(&g, &t, &PathSystem::default()).unwrap());
    }

    #[test]
    fn every_packing_enumerated() {
        let (g, t) = triangle();
        assert_eq!(all_packings(&g, &t).unwrap().len(), 8);
        let (g, t) = star();
        let all = all_packings(&g, &t).unwrap();
        assert_eq!(all.iter().map(|p| p.len()).collect::<Vec<_>>(), vec![1, 1, 1, 0]);
    }
}
