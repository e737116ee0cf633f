//! Lovász–Cherkassky packings of edge-disjoint T-paths with per-terminal
//! orthogonal cuts.

mod removal;
mod splitting;

pub use removal::{pack_by_removal, removable_tpath, tight_cut, TightCut};
pub use splitting::{
    admissible_partners, complete_splitting, deletable_parallel_pair, is_admissible, lift_paths, split_off,
    SplitRecord,
};

use crate::error::Result;
use crate::menger::lambda_to;
use crate::multigraph::{EdgeId, EdgeSet, Multigraph, TerminalSet, VertexId, VertexSet};
use crate::path::{Path, PathSystem};
use crate::waves::{extend_through_waves, wave_elimination};
use std::collections::BTreeMap;
use std::fmt;

/// λ(t, T − t) for every terminal.
pub fn terminal_lambdas(g: &Multigraph, t: &TerminalSet) -> Result<BTreeMap<VertexId, usize>> {
    t.iter().map(|x| Ok((x, lambda_to(g, x, &t.others(x))?))).collect()
}

/// Whether δ(t) can be covered by edge-disjoint T-paths, i.e. λ(t, T − t) = d(t).
pub fn linkability_check(g: &Multigraph, t: &TerminalSet, terminal: VertexId) -> Result<bool> {
    t.require(terminal)?;
    Ok(lambda_to(g, terminal, &t.others(terminal))? == g.degree(terminal))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminalCut {
    pub edges: EdgeSet,
    pub side: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingCertificate {
    pub paths: PathSystem,
    pub cuts: BTreeMap<VertexId, TerminalCut>,
}

impl PackingCertificate {
    /// For each path ending at `t`, the edge of C_t it uses.
    pub fn choice(&self, t: VertexId) -> BTreeMap<usize, EdgeId> {
        let Some(cut) = self.cuts.get(&t) else {
            return BTreeMap::new();
        };
        self.paths
            .ending_at(t)
            .into_iter()
            .filter_map(|i| {
                let e = self.paths.paths[i].edges.iter().find(|e| cut.edges.contains(e))?;
                Some((i, *e))
            })
            .collect()
    }
}

/// A maximum T-path packing together with one cut per terminal that is
/// orthogonal to the paths ending there.
///
/// Edges between two terminals are set aside as single-edge paths, the large
/// wave of every terminal is eliminated, the remainder is split off completely
/// and the resulting terminal edges are lifted back through the splits and
/// the waves.
pub fn solve(g: &Multigraph, t: &TerminalSet) -> Result<PackingCertificate> {
    g.require_inner_eulerian(t)?;
    let peeled: EdgeSet = g
        .edges()
        .filter(|(_, [a, b])| t.contains(*a) && t.contains(*b))
        .map(|(e, _)| e)
        .collect();
    let rest = g.without_edges(&peeled);
    let order: Vec<VertexId> = t.iter().collect();
    let record = wave_elimination(&rest, t, &order)?;
    let (split, records) = complete_splitting(&record.result, t)?;
    let lifted = lift_paths(&records, &split);
    let extended = extend_through_waves(&record, &lifted)?;

    let mut paths: Vec<Path> = peeled
        .iter()
        .map(|e| {
            let [a, b] = g.endpoints(*e).unwrap();
            Path {
                vertices: vec![a, b],
                edges: vec![*e],
            }
        })
        .collect();
    paths.extend(extended.paths);

    let mut cuts = BTreeMap::new();
    for x in t.iter() {
        let side = record
            .step_for(x)
            .map(|s| s.side.clone())
            .unwrap_or_else(|| VertexSet::from([x]));
        cuts.insert(
            x,
            TerminalCut {
                edges: g.boundary(&side)?,
                side,
            },
        );
    }
    Ok(PackingCertificate {
        paths: PathSystem::new(paths),
        cuts,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateError {
    NotATPath { path: usize },
    NotDisjoint { edge: EdgeId },
    MissingCut { terminal: VertexId },
    UnknownTerminal { vertex: VertexId },
    BadSide { terminal: VertexId },
    NotACut { terminal: VertexId },
    NotOrthogonal { terminal: VertexId },
    NotMinimum { terminal: VertexId, size: usize, lambda: usize },
}

impl CertificateError {
    pub fn code(&self) -> &'static str {
        match self {
            CertificateError::NotATPath { .. } => "not-a-t-path",
            CertificateError::NotDisjoint { .. } => "not-disjoint",
            CertificateError::MissingCut { .. } => "missing-cut",
            CertificateError::UnknownTerminal { .. } => "unknown-terminal",
            CertificateError::BadSide { .. } => "bad-side",
            CertificateError::NotACut { .. } => "not-a-cut",
            CertificateError::NotOrthogonal { .. } => "not-orthogonal",
            CertificateError::NotMinimum { .. } => "not-minimum",
        }
    }
}

impl fmt::Display for CertificateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())?;
        match self {
            CertificateError::NotATPath { path } => write!(f, ": path {path}"),
            CertificateError::NotDisjoint { edge } => write!(f, ": edge {edge} used twice"),
            CertificateError::UnknownTerminal { vertex } => write!(f, ": {vertex}"),
            CertificateError::MissingCut { terminal }
            | CertificateError::BadSide { terminal }
            | CertificateError::NotACut { terminal }
            | CertificateError::NotOrthogonal { terminal } => write!(f, ": terminal {terminal}"),
            CertificateError::NotMinimum { terminal, size, lambda } => {
                write!(f, ": terminal {terminal} has a cut of {size} edges but lambda {lambda}")
            }
        }
    }
}

impl std::error::Error for CertificateError {}

/// Re-checks a certificate from scratch against `g` and `t`.
pub fn verify_certificate(g: &Multigraph, t: &TerminalSet, cert: &PackingCertificate) -> Result<(), CertificateError> {
    for (i, p) in cert.paths.iter().enumerate() {
        if !p.is_t_path(g, t) {
            return Err(CertificateError::NotATPath { path: i });
        }
    }
    let mut used = EdgeSet::new();
    for e in cert.paths.iter().flat_map(|p| p.edges.iter()) {
        if !used.insert(*e) {
            return Err(CertificateError::NotDisjoint { edge: *e });
        }
    }
    if let Some(v) = cert.cuts.keys().find(|v| !t.contains(**v)) {
        return Err(CertificateError::UnknownTerminal { vertex: *v });
    }
    for x in t.iter() {
        let cut = cert.cuts.get(&x).ok_or(CertificateError::MissingCut { terminal: x })?;
        let side_ok = cut.side.contains(&x)
            && cut.side.iter().all(|v| g.has_vertex(*v) && (*v == x || !t.contains(*v)));
        if !side_ok {
            return Err(CertificateError::BadSide { terminal: x });
        }
        if g.boundary(&cut.side).ok().as_ref() != Some(&cut.edges) {
            return Err(CertificateError::NotACut { terminal: x });
        }
        let ending = cert.paths.ending_at(x);
        let mut hit = EdgeSet::new();
        for i in &ending {
            let on_cut: Vec<_> = cert.paths.paths[*i].edges.iter().filter(|e| cut.edges.contains(e)).collect();
            if on_cut.len() != 1 {
                return Err(CertificateError::NotOrthogonal { terminal: x });
            }
            hit.insert(*on_cut[0]);
        }
        if hit != cut.edges {
            return Err(CertificateError::NotOrthogonal { terminal: x });
        }
        let lambda = lambda_to(g, x, &t.others(x)).expect("terminals are vertices");
        if cut.edges.len() != lambda {
            return Err(CertificateError::NotMinimum {
                terminal: x,
                size: cut.edges.len(),
                lambda,
            });
        }
    }
    Ok(())
}
