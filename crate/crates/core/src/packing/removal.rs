use crate::error::{Error, Result};
use crate::menger::{lambda, min_cut_smallest};
use crate::multigraph::{Cut, EdgeId, EdgeSet, Multigraph, TerminalSet, VertexId, VertexSet};
use crate::path::{Path, PathSystem};
use crate::waves::large_wave;

use super::terminal_lambdas;

fn require_linkable(g: &Multigraph, t: &TerminalSet) -> Result<()> {
    for (x, l) in terminal_lambdas(g, t)? {
        if l != g.degree(x) {
            return Err(Error::NotLinkable {
                terminal: x,
                lambda: l,
                degree: g.degree(x),
            });
        }
    }
    Ok(())
}

/// All T-paths leaving `t` through `e`, shortest first, ties by edge ids.
fn t_paths_through(g: &Multigraph, t: &TerminalSet, start: VertexId, e: EdgeId) -> Vec<Path> {
    fn dfs(g: &Multigraph, t: &TerminalSet, cur: &mut Path, out: &mut Vec<Path>) {
        let v = cur.last();
        if t.contains(v) {
            out.push(cur.clone());
            return;
        }
        for f in g.incident(v).collect::<Vec<_>>() {
            let w = g.other_end(f, v).unwrap();
            if cur.vertices.contains(&w) {
                continue;
            }
            cur.vertices.push(w);
            cur.edges.push(f);
            dfs(g, t, cur, out);
            cur.vertices.pop();
            cur.edges.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = Path {
        vertices: vec![start, g.other_end(e, start).unwrap()],
        edges: vec![e],
    };
    dfs(g, t, &mut cur, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.edges.cmp(&b.edges)));
    out
}

/// A T-path through `e ∈ δ(t)` whose deletion keeps the linkability
/// condition for every terminal.
///
/// Candidates are tried shortest first. A terminal whose only wave is the
/// trivial one stays linkable after deleting any two edges away from it, so
/// its flow check is skipped for such candidates.
pub fn removable_tpath(g: &Multigraph, t: &TerminalSet, terminal: VertexId, e: EdgeId) -> Result<Path> {
    t.require(terminal)?;
    g.endpoints(e)?;
    if g.other_end(e, terminal).is_none() {
        return Err(Error::EdgeNotAtTerminal { edge: e, terminal });
    }
    g.require_inner_eulerian(t)?;
    require_linkable(g, t)?;
    let mut robust = VertexSet::new();
    for x in t.iter() {
        if large_wave(g, t, x, None)?.is_trivial() {
            robust.insert(x);
        }
    }
    for p in t_paths_through(g, t, terminal, e) {
        let removed = p.edge_set();
        let rest = g.without_edges(&removed);
        let ok = t.iter().all(|x| {
            let away = removed.iter().filter(|f| g.other_end(**f, x).is_none()).count();
            if robust.contains(&x) && away <= 2 {
                return true;
            }
            lambda(&rest, &VertexSet::from([x]), &t.others(x)).expect("terminals are vertices") == rest.degree(x)
        });
        if ok {
            return Ok(p);
        }
    }
    Err(Error::SearchExhausted(e))
}

/// Covers every terminal edge by repeatedly deleting a removable T-path
/// through the lowest edge at the lowest terminal that still has one.
pub fn pack_by_removal(g: &Multigraph, t: &TerminalSet) -> Result<PathSystem> {
    let mut cur = g.clone();
    let mut paths = Vec::new();
    while let Some((x, e)) = t.iter().find_map(|x| cur.incident(x).next().map(|e| (x, e))) {
        let p = removable_tpath(&cur, t, x, e)?;
        cur = cur.without_edges(&p.edge_set());
        paths.push(p);
    }
    Ok(PathSystem::new(paths))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TightCut {
    /// Every system covering δ(s) uses the edge; this minimum cut contains it
    /// and is orthogonal to all of them.
    Tight(Cut),
    NotObligatory,
}

/// For `e ∉ δ(s)` with δ(s) coverable towards `b`: the ⪯-smallest minimum cut
/// of G − e plus `e` when every covering system must use `e`.
pub fn tight_cut(g: &Multigraph, s: VertexId, b: &VertexSet, e: EdgeId) -> Result<TightCut> {
    let a = VertexSet::from([s]);
    g.endpoints(e)?;
    if g.other_end(e, s).is_some() {
        return Err(Error::EdgeAtSource(e));
    }
    let l = lambda(g, &a, b)?;
    if l != g.degree(s) {
        return Err(Error::NotLinkable {
            terminal: s,
            lambda: l,
            degree: g.degree(s),
        });
    }
    let without = g.without_edges(&EdgeSet::from([e]));
    if lambda(&without, &a, b)? == l {
        return Ok(TightCut::NotObligatory);
    }
    let d = min_cut_smallest(&without, &a, b)?;
    let mut edges = d.edges;
    edges.insert(e);
    debug_assert_eq!(g.boundary(&d.side).unwrap(), edges);
    Ok(TightCut::Tight(Cut {
        edges,
        side: d.side,
        minimal: true,
    }))
}
