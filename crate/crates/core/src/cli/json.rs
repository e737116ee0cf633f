//! Certificate files. Vertices are written by name, keys and id arrays are
//! sorted so that equal certificates are byte-identical.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, Multigraph, VertexSet};
use crate::packing::{PackingCertificate, TerminalCut};
use crate::path::{Path, PathSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathJson {
    pub edges: Vec<u32>,
    pub vertices: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CutJson {
    pub edges: Vec<u32>,
    pub side: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub cuts: BTreeMap<String, CutJson>,
    pub paths: Vec<PathJson>,
}

fn sorted_names(g: &Multigraph, side: &VertexSet) -> Vec<String> {
    let mut names: Vec<String> = side.iter().map(|v| g.name(*v).to_string()).collect();
    names.sort();
    names
}

impl CertificateJson {
    pub fn from_certificate(g: &Multigraph, cert: &PackingCertificate) -> CertificateJson {
        let paths = cert
            .paths
            .iter()
            .map(|p| PathJson {
                edges: p.edges.iter().map(|e| e.0).collect(),
                vertices: p.vertices.iter().map(|v| g.name(*v).to_string()).collect(),
            })
            .collect();
        let cuts = cert
            .cuts
            .iter()
            .map(|(t, c)| {
                let cut = CutJson {
                    edges: c.edges.iter().map(|e| e.0).collect(),
                    side: sorted_names(g, &c.side),
                };
                (g.name(*t).to_string(), cut)
            })
            .collect();
        CertificateJson { cuts, paths }
    }

    /// Resolves names against `g`. Structural checks are left to the verifier.
    pub fn to_certificate(&self, g: &Multigraph) -> Result<PackingCertificate> {
        let paths = self
            .paths
            .iter()
            .map(|p| {
                if p.vertices.len() != p.edges.len() + 1 {
                    return Err(Error::InvalidPaths(format!(
                        "path with {} vertices and {} edges",
                        p.vertices.len(),
                        p.edges.len()
                    )));
                }
                Ok(Path {
                    vertices: p.vertices.iter().map(|n| g.vertex_by_name(n)).collect::<Result<_>>()?,
                    edges: p.edges.iter().map(|e| EdgeId(*e)).collect(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut cuts = BTreeMap::new();
        for (name, c) in &self.cuts {
            let cut = TerminalCut {
                edges: c.edges.iter().map(|e| EdgeId(*e)).collect(),
                side: c.side.iter().map(|n| g.vertex_by_name(n)).collect::<Result<_>>()?,
            };
            cuts.insert(g.vertex_by_name(name)?, cut);
        }
        Ok(PackingCertificate {
            paths: PathSystem::new(paths),
            cuts,
        })
    }
}
