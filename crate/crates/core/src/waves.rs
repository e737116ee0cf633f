//! Waves at a terminal, large waves, and wave elimination.

use crate::error::{Error, Result};
use crate::flow::EdgeFlow;
use crate::menger::{is_minimal_separator, pym_merge};
use crate::multigraph::{Cut, EdgeId, Multigraph, TerminalSet, VertexId, VertexSet};
use crate::path::{Path, PathSystem};
use std::collections::BTreeMap;

/// Edge-disjoint paths from `root` whose last edges form the minimal cut `cut`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wave {
    pub root: VertexId,
    pub paths: PathSystem,
    pub cut: Cut,
}

impl Wave {
    /// δ(s) as length-one paths.
    pub fn trivial(g: &Multigraph, s: VertexId) -> Wave {
        let paths = g
            .incident(s)
            .map(|e| Path {
                vertices: vec![s, g.other_end(e, s).unwrap()],
                edges: vec![e],
            })
            .collect();
        let side = VertexSet::from([s]);
        Wave {
            root: s,
            paths,
            cut: Cut {
                edges: g.boundary_unchecked(&side),
                side,
                minimal: true,
            },
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.cut.side.len() == 1
    }

    /// The path whose last edge is `e`.
    pub fn path_ending_with(&self, e: EdgeId) -> Option<&Path> {
        self.paths.iter().find(|p| p.last_edge() == Some(e))
    }
}

/// Checks every wave invariant of `w` as an s(T−s)-wave in `g`.
pub fn is_wave(g: &Multigraph, t: &TerminalSet, s: VertexId, w: &Wave) -> bool {
    if w.root != s || !t.contains(s) || !w.paths.is_edge_disjoint() {
        return false;
    }
    let mut last = Vec::new();
    for p in w.paths.iter() {
        if p.is_empty() || p.first() != s || p.check(g).is_err() {
            return false;
        }
        last.push(p.last_edge().unwrap());
    }
    let last_set: crate::multigraph::EdgeSet = last.iter().copied().collect();
    if last_set.len() != last.len() || last_set != w.cut.edges {
        return false;
    }
    let side = &w.cut.side;
    if !side.contains(&s) || side.iter().any(|v| *v != s && t.contains(*v)) {
        return false;
    }
    if g.boundary(side).ok().as_ref() != Some(&w.cut.edges) {
        return false;
    }
    is_minimal_separator(g, &VertexSet::from([s]), &t.others(s), &w.cut.edges)
}

/// The large s-wave: its cut is the ⪯-largest cut carrying a wave.
///
/// Repeatedly contracts the s-side of the ⪯-largest minimum cut between s and
/// the other terminals of its component, composing the truncated flow paths,
/// until that cut is δ(s). With a seed, the result additionally starts with
/// every s-edge of the seed.
pub fn large_wave(g: &Multigraph, t: &TerminalSet, s: VertexId, seed: Option<&PathSystem>) -> Result<Wave> {
    t.require(s)?;
    let wave = unseeded_large_wave(g, t, s)?;
    match seed {
        Some(seed) if !seed.is_empty() => reseed(g, t, s, wave, seed),
        _ => Ok(wave),
    }
}

fn unseeded_large_wave(g: &Multigraph, t: &TerminalSet, s: VertexId) -> Result<Wave> {
    let mut h = g.clone();
    let mut side = VertexSet::from([s]);
    // wave path (in g) ending with each current edge at s
    let mut paths: BTreeMap<EdgeId, Path> = BTreeMap::new();
    loop {
        let comp = h.component_of(s);
        let others: VertexSet = t.others(s).into_iter().filter(|v| comp.contains(v)).collect();
        let mut flow = EdgeFlow::new(&h, &VertexSet::from([s]), &others)?;
        flow.run();
        let grown: VertexSet = flow
            .largest_side()
            .into_iter()
            .filter(|v| comp.contains(v))
            .collect();
        if grown.len() == 1 {
            break;
        }
        let cut = h.boundary_unchecked(&grown);
        let mut next = BTreeMap::new();
        for p in flow.paths().iter() {
            let k = p.edges.iter().position(|e| cut.contains(e)).expect("flow path crosses a minimum cut");
            let head = p.truncate_after_edge(k);
            let first = head.edges[0];
            let tail = Path {
                vertices: head.vertices[1..].to_vec(),
                edges: head.edges[1..].to_vec(),
            };
            let composed = match paths.get(&first) {
                Some(prefix) => prefix.clone().join(&tail),
                None => head,
            };
            next.insert(*composed.edges.last().unwrap(), composed);
        }
        paths = next;
        side.extend(grown.iter().copied());
        h = h.contract_set(s, &grown)?;
    }
    if side.len() == 1 {
        return Ok(Wave::trivial(g, s));
    }
    let edges = g.boundary_unchecked(&side);
    debug_assert!(edges.iter().all(|e| paths.contains_key(e)));
    Ok(Wave {
        root: s,
        paths: edges.iter().map(|e| paths[e].clone()).collect(),
        cut: Cut {
            edges,
            side,
            minimal: true,
        },
    })
}

/// Re-routes the wave so that it starts with every s-edge of `seed`, by
/// merging the truncated seed with the wave in the graph where the far side
/// of the wave cut is contracted to one terminal.
fn reseed(g: &Multigraph, t: &TerminalSet, s: VertexId, wave: Wave, seed: &PathSystem) -> Result<Wave> {
    let others = t.others(s);
    for p in seed.iter() {
        if p.is_empty() || p.first() != s || !others.contains(&p.last()) {
            return Err(Error::InvalidPaths("seed path must run from s to another terminal".into()));
        }
    }
    let far: VertexSet = g.vertices().filter(|v| !wave.cut.side.contains(v)).collect();
    let Some(r) = others.iter().copied().find(|v| far.contains(v)) else {
        return Ok(wave);
    };
    let h = g.contract_set(r, &far)?;
    let into_r = |p: &Path| {
        let mut p = p.clone();
        *p.vertices.last_mut().unwrap() = r;
        p
    };
    let mut truncated = Vec::new();
    for p in seed.iter() {
        let k = p
            .edges
            .iter()
            .position(|e| wave.cut.edges.contains(e))
            .ok_or_else(|| Error::InvalidPaths("seed path avoids the wave cut".into()))?;
        truncated.push(into_r(&p.truncate_after_edge(k)));
    }
    let own: PathSystem = wave.paths.iter().map(into_r).collect();
    let merged = pym_merge(&h, s, r, &PathSystem::new(truncated), &own)?;
    let paths = merged
        .iter()
        .map(|p| {
            let mut p = p.clone();
            let e = p.last_edge().unwrap();
            let before = p.vertices[p.vertices.len() - 2];
            *p.vertices.last_mut().unwrap() = g.other_end(e, before).unwrap();
            p
        })
        .collect();
    Ok(Wave {
        root: s,
        paths,
        cut: wave.cut,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationStep {
    pub terminal: VertexId,
    /// The large wave, in the coordinates of the graph before this step.
    pub wave: Wave,
    /// The contracted zone expanded to vertices of the input graph.
    pub side: VertexSet,
    /// The graph after contracting the zone.
    pub graph: Multigraph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationRecord {
    pub order: Vec<VertexId>,
    pub steps: Vec<EliminationStep>,
    pub original: Multigraph,
    pub result: Multigraph,
}

impl EliminationRecord {
    /// The last step processing `t`, if any.
    pub fn step_for(&self, t: VertexId) -> Option<&EliminationStep> {
        self.steps.iter().rev().find(|s| s.terminal == t)
    }
}

/// Contracts the large wave of each listed terminal in turn.
pub fn wave_elimination(g: &Multigraph, t: &TerminalSet, order: &[VertexId]) -> Result<EliminationRecord> {
    let mut current = g.clone();
    let mut zone: BTreeMap<VertexId, VertexSet> = g.vertices().map(|v| (v, VertexSet::from([v]))).collect();
    let mut steps = Vec::new();
    for &s in order {
        let wave = large_wave(&current, t, s, None)?;
        let mut side = VertexSet::new();
        for v in &wave.cut.side {
            side.extend(zone.remove(v).unwrap());
        }
        zone.insert(s, side.clone());
        current = current.contract_set(s, &wave.cut.side)?;
        steps.push(EliminationStep {
            terminal: s,
            wave,
            side,
            graph: current.clone(),
        });
    }
    Ok(EliminationRecord {
        order: order.to_vec(),
        steps,
        original: g.clone(),
        result: current,
    })
}

/// Lifts a path system of the eliminated graph back to the input graph by
/// splicing in the wave path behind each edge at a processed terminal.
pub fn extend_through_waves(record: &EliminationRecord, p: &PathSystem) -> Result<PathSystem> {
    for path in p.iter() {
        if let Err(d) = path.check(&record.result) {
            return Err(Error::InvalidPaths(d.to_string()));
        }
    }
    let mut paths = p.paths.clone();
    for step in record.steps.iter().rev() {
        let s = step.terminal;
        for path in paths.iter_mut() {
            if path.is_empty() {
                continue;
            }
            if path.first() == s {
                let wave_path = step.wave.path_ending_with(path.edges[0]).expect("edge at s lies in the wave cut");
                let tail = Path {
                    vertices: path.vertices[1..].to_vec(),
                    edges: path.edges[1..].to_vec(),
                };
                *path = wave_path.clone().join(&tail);
            }
            if path.last() == s {
                let e = path.last_edge().unwrap();
                let wave_path = step.wave.path_ending_with(e).expect("edge at s lies in the wave cut").reversed();
                let n = path.vertices.len();
                let head = Path {
                    vertices: path.vertices[..n - 1].to_vec(),
                    edges: path.edges[..n - 2].to_vec(),
                };
                *path = head.join(&wave_path);
            }
        }
    }
    Ok(PathSystem::new(paths))
}
