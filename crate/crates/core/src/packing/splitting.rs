use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, Multigraph, TerminalSet, VertexId};
use crate::path::{shortcut_walk, Path, PathSystem};
use std::collections::BTreeMap;

use super::terminal_lambdas;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitRecord {
    /// `e = v·ends[0]` and `f = v·ends[1]` were replaced by `h = ends[0]·ends[1]`.
    Split {
        vertex: VertexId,
        e: EdgeId,
        f: EdgeId,
        h: EdgeId,
        ends: [VertexId; 2],
    },
    /// Two parallel edges between `vertex` and `other` were deleted.
    CycleDeletion {
        vertex: VertexId,
        other: VertexId,
        e: EdgeId,
        f: EdgeId,
    },
}

fn split_ends(g: &Multigraph, t: &TerminalSet, e: EdgeId, f: EdgeId) -> Result<(VertexId, [VertexId; 2])> {
    let invalid = |reason| Error::InvalidSplit { e, f, reason };
    if e == f {
        return Err(invalid("the two edges coincide"));
    }
    let [a, b] = g.endpoints(e)?;
    let [c, d] = g.endpoints(f)?;
    let shared: Vec<_> = [a, b].into_iter().filter(|x| *x == c || *x == d).collect();
    let v = match shared.as_slice() {
        [v] => *v,
        [] => return Err(invalid("the edges share no endpoint")),
        _ => return Err(invalid("the edges are parallel, splitting would create a loop")),
    };
    if t.contains(v) {
        return Err(invalid("the shared endpoint is a terminal"));
    }
    let x = g.other_end(e, v).unwrap();
    let y = g.other_end(f, v).unwrap();
    Ok((v, [x, y]))
}

/// Replaces `e = vx` and `f = vy` by a fresh edge `xy`.
pub fn split_off(g: &Multigraph, t: &TerminalSet, e: EdgeId, f: EdgeId) -> Result<(Multigraph, SplitRecord)> {
    let (v, [x, y]) = split_ends(g, t, e, f)?;
    let mut out = g.clone();
    out.remove_edge(e);
    out.remove_edge(f);
    let h = out.push_edge(x, y)?;
    Ok((
        out,
        SplitRecord::Split {
            vertex: v,
            e,
            f,
            h,
            ends: [x, y],
        },
    ))
}

/// The split of `e` and `f` keeps λ(t, T − t) for every terminal t.
pub fn is_admissible(g: &Multigraph, t: &TerminalSet, e: EdgeId, f: EdgeId) -> Result<bool> {
    let (after, _) = split_off(g, t, e, f)?;
    Ok(terminal_lambdas(&after, t)? == terminal_lambdas(g, t)?)
}

/// Admissible partners of `e` at inner vertex `v`, in id order.
pub fn admissible_partners(g: &Multigraph, t: &TerminalSet, v: VertexId, e: EdgeId) -> Result<Vec<EdgeId>> {
    let before = terminal_lambdas(g, t)?;
    let mut out = Vec::new();
    for f in g.incident(v) {
        if f == e || split_ends(g, t, e, f).is_err() {
            continue;
        }
        let (after, _) = split_off(g, t, e, f)?;
        if terminal_lambdas(&after, t)? == before {
            out.push(f);
        }
    }
    Ok(out)
}

/// Lowest-id parallel pair at `v` whose deletion keeps every λ(t, T − t).
pub fn deletable_parallel_pair(g: &Multigraph, t: &TerminalSet, v: VertexId) -> Result<Option<(EdgeId, EdgeId)>> {
    let before = terminal_lambdas(g, t)?;
    let mut by_other: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
    for e in g.incident(v) {
        by_other.entry(g.other_end(e, v).unwrap()).or_default().push(e);
    }
    let mut pairs: Vec<(EdgeId, EdgeId)> = by_other
        .values()
        .filter(|es| es.len() >= 2)
        .map(|es| (es[0], es[1]))
        .collect();
    pairs.sort();
    for (e, f) in pairs {
        let mut after = g.clone();
        after.remove_edge(e);
        after.remove_edge(f);
        if terminal_lambdas(&after, t)? == before {
            return Ok(Some((e, f)));
        }
    }
    Ok(None)
}

/// Splits off every inner vertex, lowest id first, and drops it.
///
/// At each step the lowest edge at the vertex is paired with its first
/// admissible partner by id. When none exists a parallel pair is deleted
/// instead, provided that keeps all terminal connectivities.
pub fn complete_splitting(g: &Multigraph, t: &TerminalSet) -> Result<(Multigraph, Vec<SplitRecord>)> {
    g.require_inner_eulerian(t)?;
    let mut cur = g.clone();
    let mut records = Vec::new();
    let inner: Vec<VertexId> = g.vertices().filter(|v| !t.contains(*v)).collect();
    for v in inner {
        loop {
            let Some(e) = cur.incident(v).next() else { break };
            if let Some(&f) = admissible_partners(&cur, t, v, e)?.first() {
                let (next, record) = split_off(&cur, t, e, f)?;
                cur = next;
                records.push(record);
            } else if let Some((e, f)) = deletable_parallel_pair(&cur, t, v)? {
                let other = cur.other_end(e, v).unwrap();
                cur.remove_edge(e);
                cur.remove_edge(f);
                records.push(SplitRecord::CycleDeletion { vertex: v, other, e, f });
            } else {
                return Err(Error::NoAdmissiblePair { vertex: v, edge: e });
            }
        }
        cur.remove_vertex(v);
    }
    Ok((cur, records))
}

/// Expands every edge of the split graph back into a T-path of the graph
/// the records were taken from.
pub fn lift_paths(records: &[SplitRecord], split: &Multigraph) -> PathSystem {
    let expansions: BTreeMap<EdgeId, (VertexId, EdgeId, EdgeId, [VertexId; 2])> = records
        .iter()
        .filter_map(|r| match r {
            SplitRecord::Split { vertex, e, f, h, ends } => Some((*h, (*vertex, *e, *f, *ends))),
            SplitRecord::CycleDeletion { .. } => None,
        })
        .collect();
    split
        .edges()
        .map(|(h, [a, b])| {
            let mut walk = Path::trivial(a);
            expand(&expansions, h, a, b, &mut walk);
            shortcut_walk(&walk).0
        })
        .collect()
}

fn expand(
    expansions: &BTreeMap<EdgeId, (VertexId, EdgeId, EdgeId, [VertexId; 2])>,
    h: EdgeId,
    from: VertexId,
    to: VertexId,
    walk: &mut Path,
) {
    match expansions.get(&h) {
        None => {
            walk.edges.push(h);
            walk.vertices.push(to);
        }
        Some(&(v, e, f, [x, _])) => {
            if from == x {
                expand(expansions, e, from, v, walk);
                expand(expansions, f, v, to, walk);
            } else {
                expand(expansions, f, from, v, walk);
                expand(expansions, e, v, to, walk);
            }
        }
    }
}
