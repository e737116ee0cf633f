//! The `tpaths` command line: graph files in, reports and certificates out.
//!
//! Exit codes: 0 on success, 1 when the checked property fails, 2 on bad input.

pub mod dot;
pub mod json;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::closure::{closed_partition, ClosureSystem};
use crate::duality::{brute_force_max_packing, mader_min, obstructive_components, BRUTE_FORCE_MAX_EDGES, MADER_MAX_INNER};
use crate::error::Error;
use crate::menger::{lambda, min_cut_largest, min_cut_smallest};
use crate::multigraph::{parse_graph, random_inner_eulerian, Cut, EdgeSet, Multigraph, SizeBounds, TerminalSet, VertexSet};
use crate::packing::{solve, terminal_lambdas, verify_certificate, CertificateError, PackingCertificate};
use crate::path::{Path, PathSystem};
use crate::waves::large_wave;

use self::json::CertificateJson;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "tpaths", version, about = "Edge-disjoint T-path packings with cut certificates")]
pub struct RunConfig {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inner Eulerian check and per-terminal linkability.
    Check { graph: PathBuf },
    /// λ(t, T − t) and d(t) for every terminal.
    Lambda { graph: PathBuf },
    /// Smallest and largest minimum cuts between two vertices.
    Mincut { graph: PathBuf, s: String, t: String },
    /// The large wave of every terminal.
    Waves { graph: PathBuf },
    /// A maximum T-path packing; `--certify` emits the checked certificate as JSON.
    Pack {
        graph: PathBuf,
        #[arg(long)]
        certify: bool,
    },
    /// Re-check a certificate file against a graph.
    Verify { graph: PathBuf, cert: PathBuf },
    /// Mader's bound with a minimising T-partition and the exact maximum.
    Mader { graph: PathBuf },
    /// Split E into closed pieces.
    Decompose { graph: PathBuf },
    /// Random instances cross-checked against the brute-force and Mader oracles.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        #[arg(long, default_value_t = 12)]
        max_edges: usize,
    },
    /// Graphviz export, optionally marking a certificate.
    Dot {
        graph: PathBuf,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Violated(String),
    Input(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Violated(_) => 1,
            Failure::Input(_) => 2,
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn library_failure(g: Option<&Multigraph>, e: Error) -> Failure {
    let named = |v| g.map(|g| g.name(v).to_string()).unwrap_or_else(|| v.to_string());
    match e {
        Error::NotInnerEulerian { vertex, degree } => {
            Failure::Violated(format!("not inner Eulerian: {} has odd degree {degree}", named(vertex)))
        }
        Error::NotLinkable { terminal, lambda, degree } => Failure::Violated(format!(
            "linkability fails at {}: lambda {lambda}, degree {degree}",
            named(terminal)
        )),
        e @ (Error::NoAdmissiblePair { .. } | Error::SearchExhausted(_) | Error::InfeasibleMerge) => {
            Failure::Violated(e.to_string())
        }
        e => Failure::Input(e.to_string()),
    }
}

fn load(path: &FsPath) -> std::result::Result<(Multigraph, TerminalSet), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn names(g: &Multigraph, set: &VertexSet) -> Vec<String> {
    set.iter().map(|v| g.name(*v).to_string()).collect()
}

fn ids(set: &EdgeSet) -> Vec<u32> {
    set.iter().map(|e| e.0).collect()
}

fn show_edges(set: &EdgeSet) -> String {
    ids(set).iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}

fn show_path(g: &Multigraph, p: &Path) -> String {
    let mut s = g.name(p.first()).to_string();
    for (e, v) in p.edges.iter().zip(&p.vertices[1..]) {
        s.push_str(&format!(" -[{e}]- {}", g.name(*v)));
    }
    s
}

fn path_json(g: &Multigraph, p: &Path) -> Value {
    json!({
        "edges": p.edges.iter().map(|e| e.0).collect::<Vec<_>>(),
        "vertices": p.vertices.iter().map(|v| g.name(*v)).collect::<Vec<_>>(),
    })
}

fn cut_json(g: &Multigraph, c: &Cut) -> Value {
    json!({"edges": ids(&c.edges), "side": names(g, &c.side)})
}

fn ratio(r: Ratio<i64>) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn emit(out: &mut dyn Write, value: &Value) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value).expect("json values serialise"))
}

fn io(e: std::io::Error) -> Failure {
    Failure::Input(format!("write failed: {e}"))
}

fn no_dot(cmd: &str) -> Failure {
    Failure::Input(format!("`{cmd}` has no dot output; use the `dot` subcommand"))
}

fn check(format: Format, graph: &FsPath, out: &mut dyn Write) -> Outcome {
    let (g, t) = load(graph)?;
    let parity = g.is_inner_eulerian(&t);
    let lambdas = terminal_lambdas(&g, &t).map_err(|e| library_failure(Some(&g), e))?;
    match format {
        Format::Dot => return Err(no_dot("check")),
        Format::Json => {
            let terminals: serde_json::Map<String, Value> = lambdas
                .iter()
                .map(|(x, l)| {
                    let d = g.degree(*x);
                    (g.name(*x).to_string(), json!({"degree": d, "lambda": l, "linkable": *l == d}))
                })
                .collect();
            let odd = parity.as_ref().err().map(|o| g.name(o.vertex));
            emit(out, &json!({"inner_eulerian": parity.is_ok(), "odd_vertex": odd, "terminals": terminals})).map_err(io)?;
        }
        Format::Text => {
            match &parity {
                Ok(()) => writeln!(out, "inner Eulerian").map_err(io)?,
                Err(o) => writeln!(out, "not inner Eulerian: {} has odd degree {}", g.name(o.vertex), o.degree).map_err(io)?,
            }
            for (x, l) in &lambdas {
                let d = g.degree(*x);
                let verdict = if *l == d { "linkable" } else { "not linkable" };
                writeln!(out, "{}: lambda {l}, degree {d}, {verdict}", g.name(*x)).map_err(io)?;
            }
        }
    }
    Ok(if parity.is_ok() { 0 } else { 1 })
}

fn lambda_cmd(format: Format, graph: &FsPath, out: &mut dyn Write) -> Outcome {
    let (g, t) = load(graph)?;
    let lambdas = terminal_lambdas(&g, &t).map_err(|e| library_failure(Some(&g), e))?;
    let half = Ratio::new(lambdas.values().sum::<usize>() as i64, 2);
    match format {
        Format::Dot => return Err(no_dot("lambda")),
        Format::Json => {
            let terminals: serde_json::Map<String, Value> = lambdas
                .iter()
                .map(|(x, l)| (g.name(*x).to_string(), json!({"degree": g.degree(*x), "lambda": l})))
                .collect();
            emit(out, &json!({"half_sum": ratio(half), "terminals": terminals})).map_err(io)?;
        }
        Format::Text => {
            for (x, l) in &lambdas {
                writeln!(out, "{}: lambda {l}, degree {}", g.name(*x), g.degree(*x)).map_err(io)?;
            }
            writeln!(out, "half sum {}", ratio(half)).map_err(io)?;
        }
    }
    Ok(0)
}

fn mincut(format: Format, graph: &FsPath, s: &str, t: &str, out: &mut dyn Write) -> Outcome {
    let (g, _) = load(graph)?;
    let vertex = |name: &str| g.vertex_by_name(name).map_err(|e| Failure::Input(e.to_string()));
    let a = VertexSet::from([vertex(s)?]);
    let b = VertexSet::from([vertex(t)?]);
    let fail = |e| library_failure(Some(&g), e);
    let value = lambda(&g, &a, &b).map_err(fail)?;
    let small = min_cut_smallest(&g, &a, &b).map_err(fail)?;
    let large = min_cut_largest(&g, &a, &b).map_err(fail)?;
    match format {
        Format::Dot => return Err(no_dot("mincut")),
        Format::Json => emit(
            out,
            &json!({"largest": cut_json(&g, &large), "smallest": cut_json(&g, &small), "value": value}),
        )
        .map_err(io)?,
        Format::Text => {
            writeln!(out, "value {value}").map_err(io)?;
            for (label, c) in [("smallest", &small), ("largest", &large)] {
                writeln!(out, "{label}: side {{{}}} edges {{{}}}", names(&g, &c.side).join(", "), show_edges(&c.edges))
                    .map_err(io)?;
            }
        }
    }
    Ok(0)
}

fn waves(format: Format, graph: &FsPath, out: &mut dyn Write) -> Outcome {
    let (g, t) = load(graph)?;
    let mut report = serde_json::Map::new();
    for x in t.iter() {
        let w = large_wave(&g, &t, x, None).map_err(|e| library_failure(Some(&g), e))?;
        match format {
            Format::Dot => return Err(no_dot("waves")),
            Format::Json => {
                let paths: Vec<Value> = w.paths.iter().map(|p| path_json(&g, p)).collect();
                report.insert(
                    g.name(x).to_string(),
                    json!({"cut": cut_json(&g, &w.cut), "paths": paths, "trivial": w.is_trivial()}),
                );
            }
            Format::Text => {
                let kind = if w.is_trivial() { " (trivial)" } else { "" };
                writeln!(
                    out,
                    "{}: side {{{}}} cut {{{}}}{kind}",
                    g.name(x),
                    names(&g, &w.cut.side).join(", "),
                    show_edges(&w.cut.edges)
                )
                .map_err(io)?;
                for p in w.paths.iter() {
                    writeln!(out, "  {}", show_path(&g, p)).map_err(io)?;
                }
            }
        }
    }
    if format == Format::Json {
        emit(out, &Value::Object(report)).map_err(io)?;
    }
    Ok(0)
}

fn write_paths(g: &Multigraph, paths: &PathSystem, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{} paths", paths.len())?;
    for (i, p) in paths.iter().enumerate() {
        writeln!(out, "P{i}: {}", show_path(g, p))?;
    }
    Ok(())
}

fn pack(format: Format, graph: &FsPath, certify: bool, out: &mut dyn Write) -> Outcome {
    let (g, t) = load(graph)?;
    let cert = solve(&g, &t).map_err(|e| library_failure(Some(&g), e))?;
    if certify {
        if let Err(e) = verify_certificate(&g, &t, &cert) {
            return Err(Failure::Violated(format!("solver produced a rejected certificate: {}", describe(&g, &e))));
        }
    }
    match format {
        Format::Dot => write!(out, "{}", dot::to_dot(&g, &t, certify.then_some(&cert))).map_err(io)?,
        _ if certify => {
            let text = serde_json::to_string_pretty(&CertificateJson::from_certificate(&g, &cert)).expect("serialisable");
            writeln!(out, "{text}").map_err(io)?;
        }
        Format::Json => {
            let paths: Vec<Value> = cert.paths.iter().map(|p| path_json(&g, p)).collect();
            emit(out, &json!({"count": paths.len(), "paths": paths})).map_err(io)?;
        }
        Format::Text => write_paths(&g, &cert.paths, out).map_err(io)?,
    }
    Ok(0)
}

fn describe(g: &Multigraph, e: &CertificateError) -> String {
    let n = |v| g.name(v).to_string();
    match e {
        CertificateError::NotATPath { path } => format!("{}: path {path}", e.code()),
        CertificateError::NotDisjoint { edge } => format!("{}: edge {edge} used twice", e.code()),
        CertificateError::UnknownTerminal { vertex } => format!("{}: {}", e.code(), n(*vertex)),
        CertificateError::MissingCut { terminal }
        | CertificateError::BadSide { terminal }
        | CertificateError::NotACut { terminal }
        | CertificateError::NotOrthogonal { terminal } => format!("{}: terminal {}", e.code(), n(*terminal)),
        CertificateError::NotMinimum { terminal, size, lambda } => {
            format!("{}: terminal {} has a cut of {size} edges but lambda {lambda}", e.code(), n(*terminal))
        }
    }
}

fn read_certificate(g: &Multigraph, path: &FsPath) -> std::result::Result<PackingCertificate, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let parsed: CertificateJson =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parsed
        .to_certificate(g)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn verify(format: Format, graph: &FsPath, cert: &FsPath, out: &mut dyn Write) -> Outcome {
    let (g, t) = load(graph)?;
    let c = read_certificate(&g, cert)?;
    let verdict = verify_certificate(&g, &t, &c);
    match format {
        Format::Dot => return Err(no_dot("verify")),
        Format::Json => {
            let value = match &verdict {
                Ok(()) => json!({"paths": c.paths.len(), "verified": true}),
                Err(e) => json!({"detail": describe(&g, e), "reason": e.code(), "verified": false}),
            };
            emit(out, &value).map_err(io)?;
        }
        Format::Text => match &verdict {
            Ok(()) => writeln!(out, "verified: {} paths", c.paths.len()).map_err(io)?,
            Err(e) => writeln!(out, "rejected: {}", describe(&g, e)).map_err(io)?,
        },
    }
    Ok(if verdict.is_ok() { 0 } else { 1 })
}

fn mader(format: Format, graph: &FsPath, out: &mut dyn Write) -> Outcome {
    let (g, t) = load(graph)?;
    let fail = |e| library_failure(Some(&g), e);
    let (bound, partition) = mader_min(&g, &t).map_err(fail)?;
    let report = obstructive_components(&g, &t, &partition).map_err(fail)?;
    let exact = if g.edge_count() <= BRUTE_FORCE_MAX_EDGES {
        Some(brute_force_max_packing(&g, &t).map_err(fail)?.len())
    } else {
        None
    };
    let agree = exact.is_none_or(|m| m as i64 == bound.floor().to_integer());
    match format {
        Format::Dot => return Err(no_dot("mader")),
        Format::Json => {
            let parts: serde_json::Map<String, Value> = partition
                .parts
                .iter()
                .map(|(x, p)| (g.name(*x).to_string(), json!(names(&g, p))))
                .collect();
            let components: Vec<Value> = report
                .components
                .iter()
                .map(|c| json!({"degree": c.degree, "obstructive": c.obstructive, "vertices": names(&g, &c.vertices)}))
                .collect();
            emit(
                out,
                &json!({
                    "bound": ratio(bound),
                    "components": components,
                    "floor": bound.floor().to_integer(),
                    "maximum": exact,
                    "partition": parts,
                }),
            )
            .map_err(io)?;
        }
        Format::Text => {
            writeln!(out, "mader bound {} (floor {})", ratio(bound), bound.floor().to_integer()).map_err(io)?;
            for (x, p) in &partition.parts {
                writeln!(out, "X_{} = {{{}}}", g.name(*x), names(&g, p).join(", ")).map_err(io)?;
            }
            for c in &report.components {
                let kind = if c.obstructive { "obstructive" } else { "even" };
                writeln!(out, "component {{{}}}: d = {}, {kind}", names(&g, &c.vertices).join(", "), c.degree)
                    .map_err(io)?;
            }
            match exact {
                Some(m) => writeln!(out, "maximum packing {m}").map_err(io)?,
                None => writeln!(out, "maximum packing not computed (more than {BRUTE_FORCE_MAX_EDGES} edges)").map_err(io)?,
            }
        }
    }
    Ok(if agree { 0 } else { 1 })
}

fn decompose(format: Format, graph: &FsPath, out: &mut dyn Write) -> Outcome {
    let (g, t) = load(graph)?;
    let sys = ClosureSystem::build(&g, &t).map_err(|e| library_failure(Some(&g), e))?;
    let pieces = closed_partition(&sys);
    match format {
        Format::Dot => return Err(no_dot("decompose")),
        Format::Json => {
            let list: Vec<Vec<u32>> = pieces.iter().map(ids).collect();
            emit(out, &json!({"pieces": list})).map_err(io)?;
        }
        Format::Text => {
            writeln!(out, "{} pieces", pieces.len()).map_err(io)?;
            for (i, p) in pieces.iter().enumerate() {
                writeln!(out, "piece {i}: {}", show_edges(p)).map_err(io)?;
            }
        }
    }
    Ok(0)
}

/// One fuzz instance: the solver against its certificate and both oracles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzReport {
    pub seed: u64,
    pub vertices: usize,
    pub edges: usize,
    pub terminals: usize,
    pub paths: usize,
    pub mismatch: Option<String>,
}

pub fn fuzz_one(seed: u64, bounds: SizeBounds) -> FuzzReport {
    let (g, t) = random_inner_eulerian(seed, bounds);
    let mut report = FuzzReport {
        seed,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        terminals: t.len(),
        paths: 0,
        mismatch: None,
    };
    let cert = match solve(&g, &t) {
        Ok(c) => c,
        Err(e) => {
            report.mismatch = Some(format!("solver failed: {e}"));
            return report;
        }
    };
    report.paths = cert.paths.len();
    let mut problems = Vec::new();
    if let Err(e) = verify_certificate(&g, &t, &cert) {
        problems.push(format!("certificate rejected: {}", describe(&g, &e)));
    }
    let sum: usize = terminal_lambdas(&g, &t).expect("terminals are vertices").values().sum();
    if 2 * cert.paths.len() != sum {
        problems.push(format!("half sum of lambdas is {}/2", sum));
    }
    if g.edge_count() <= BRUTE_FORCE_MAX_EDGES {
        let m = brute_force_max_packing(&g, &t).expect("within limits").len();
        if m != cert.paths.len() {
            problems.push(format!("brute force finds {m}"));
        }
    }
    if g.vertex_count() - t.len() <= MADER_MAX_INNER {
        let (bound, _) = mader_min(&g, &t).expect("within limits");
        if bound.floor().to_integer() != cert.paths.len() as i64 {
            problems.push(format!("mader bound is {}", ratio(bound)));
        }
    }
    if !problems.is_empty() {
        report.mismatch = Some(problems.join("; "));
    }
    report
}

fn fuzz(format: Format, seed: u64, count: u64, bounds: SizeBounds, out: &mut dyn Write) -> Outcome {
    let end = seed
        .checked_add(count)
        .ok_or_else(|| Failure::Input("seed + count overflows".into()))?;
    let reports: Vec<FuzzReport> = (seed..end).into_par_iter().map(|s| fuzz_one(s, bounds)).collect();
    let first = reports.iter().find(|r| r.mismatch.is_some());
    match format {
        Format::Dot => return Err(no_dot("fuzz")),
        Format::Json => {
            let rows: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "edges": r.edges,
                        "mismatch": r.mismatch,
                        "paths": r.paths,
                        "seed": r.seed,
                        "terminals": r.terminals,
                        "vertices": r.vertices,
                    })
                })
                .collect();
            emit(out, &json!({"first_mismatch": first.map(|r| r.seed), "instances": rows})).map_err(io)?;
        }
        Format::Text => {
            for r in &reports {
                let status = r.mismatch.as_deref().unwrap_or("ok");
                writeln!(
                    out,
                    "seed {}: n={} m={} |T|={} paths={} {status}",
                    r.seed, r.vertices, r.edges, r.terminals, r.paths
                )
                .map_err(io)?;
            }
            match first {
                Some(r) => writeln!(out, "first mismatch at seed {}", r.seed).map_err(io)?,
                None => writeln!(out, "all {} instances agree", reports.len()).map_err(io)?,
            }
        }
    }
    Ok(if first.is_some() { 1 } else { 0 })
}

fn dot_cmd(graph: &FsPath, cert: Option<&FsPath>, out: &mut dyn Write) -> Outcome {
    let (g, t) = load(graph)?;
    let c = cert.map(|p| read_certificate(&g, p)).transpose()?;
    write!(out, "{}", dot::to_dot(&g, &t, c.as_ref())).map_err(io)?;
    Ok(0)
}

fn dispatch(config: &RunConfig, out: &mut dyn Write) -> Outcome {
    let f = config.format;
    match &config.command {
        Command::Check { graph } => check(f, graph, out),
        Command::Lambda { graph } => lambda_cmd(f, graph, out),
        Command::Mincut { graph, s, t } => mincut(f, graph, s, t, out),
        Command::Waves { graph } => waves(f, graph, out),
        Command::Pack { graph, certify } => pack(f, graph, *certify, out),
        Command::Verify { graph, cert } => verify(f, graph, cert, out),
        Command::Mader { graph } => mader(f, graph, out),
        Command::Decompose { graph } => decompose(f, graph, out),
        Command::Fuzz {
            seed,
            count,
            max_vertices,
            max_edges,
        } => {
            let bounds = SizeBounds {
                max_vertices: *max_vertices,
                max_edges: *max_edges,
            };
            fuzz(f, *seed, *count, bounds, out)
        }
        Command::Dot { graph, cert } => dot_cmd(graph, cert.as_deref(), out),
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(&config, out) {
        Ok(code) => code,
        Err(failure) => {
            let (Failure::Violated(m) | Failure::Input(m)) = &failure;
            let _ = writeln!(err, "error: {m}");
            failure.code()
        }
    }
}
