//! Command-line frontend for the `dragonforest` binary.
//!
//! Exit codes: 0 ok, 1 verification failed, 2 unparsable input,
//! 3 precondition not met, 4 engine stuck.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::density::{chi, component_bound, fractional_arboricity};
use crate::engine::{run, DensityCertificate, EngineOptions, ForestSplit, RunOutcome};
use crate::format::{parse_graph, GraphFile};
use crate::graph::{check_forest_partition, EdgeId, MultiGraph, RedForest, Vertex, Violation};
use crate::planar::{thin_tree, CutMode, EmbeddedGraph, PlanarError};
use crate::rational::Rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_STUCK: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "dragonforest", version, about = "Forest decompositions with a bounded-component forest")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the fractional arboricity and the arboricity.
    Arboricity { file: PathBuf },
    /// Decompose into k forests plus one whose components are small.
    Sndt {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Extract a 5/6-thin spanning tree from an embedded planar graph.
    Thintree {
        file: PathBuf,
        /// `exhaustive` or `sampled:N`.
        #[arg(long, default_value = "exhaustive", value_parser = parse_mode)]
        verify: CutMode,
    },
    /// Re-check a decomposition JSON against its graph.
    Verify { graph: PathBuf, decomposition: PathBuf },
}

fn parse_mode(s: &str) -> Result<CutMode, String> {
    match s.split_once(':') {
        None if s == "exhaustive" => Ok(CutMode::Exhaustive),
        Some(("sampled", n)) => n
            .parse()
            .map(|count| CutMode::Sampled { count, seed: 0 })
            .map_err(|_| format!("bad sample count `{n}`")),
        _ => Err(format!("expected `exhaustive` or `sampled:N`, got `{s}`")),
    }
}

/// What a command printed and how it exits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Report {
    fn ok(stdout: String) -> Self {
        Report {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Report {
            code,
            stdout: String::new(),
            stderr: stderr.into(),
        }
    }
}

/// Stuck-state evidence in the caller's vertex numbering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub vertices: Vec<Vertex>,
    pub red_edges: usize,
    pub density: String,
    pub threshold: String,
    #[serde(default)]
    pub violations: Vec<String>,
}

impl CertificateJson {
    fn from_certificate(c: &DensityCertificate, vertex_map: &[Vertex]) -> Self {
        let mut vertices: Vec<Vertex> = c.original_vertices().into_iter().map(|v| vertex_map[v]).collect();
        vertices.sort_unstable();
        CertificateJson {
            vertices,
            red_edges: c.red_edges,
            density: c.density.to_string(),
            threshold: c.threshold.to_string(),
            violations: c.violations.iter().map(|v| v.to_string()).collect(),
        }
    }
}

/// The decomposition file read and written by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub k: usize,
    /// Bound on the edges of each red component.
    pub d: usize,
    pub root: Vertex,
    pub blue: Vec<Vec<EdgeId>>,
    pub red: Vec<EdgeId>,
    /// `[child, parent, edge]` for every blue edge.
    pub orientations: Vec<[usize; 3]>,
    pub max_red_component_edges: usize,
    /// Per connected component (ordered by smallest vertex): whether every
    /// blue class is a spanning tree of it.
    #[serde(default)]
    pub spanning: Vec<bool>,
    pub certificate: Option<CertificateJson>,
}

/// Sorted-key JSON text.
fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("plain data serializes");
    let mut s = serde_json::to_string(&v).expect("value serializes");
    s.push('\n');
    s
}

/// Every claim of `dec` against `g`: partition, acyclicity, the red bound,
/// the reported maximum, spanning flags and orientations.
pub fn verify_decomposition(g: &MultiGraph, dec: &DecompositionJson) -> Result<(), Violation> {
    if dec.blue.len() != dec.k {
        return Err(Violation::ClaimMismatch(format!(
            "k = {} but {} blue classes",
            dec.k,
            dec.blue.len()
        )));
    }
    check_forest_partition(g, &dec.blue, &dec.red, Some(dec.d))?;
    let actual = RedForest::new(g, dec.red.iter().copied())
        .components()
        .iter()
        .map(|c| c.edge_count)
        .max()
        .unwrap_or(0);
    if actual != dec.max_red_component_edges {
        return Err(Violation::ClaimMismatch(format!(
            "max_red_component_edges is {} but the red forest has a component with {actual}",
            dec.max_red_component_edges
        )));
    }

    let comps = g.components();
    if dec.spanning.len() != comps.len() {
        return Err(Violation::ClaimMismatch(format!(
            "{} spanning flags for {} components",
            dec.spanning.len(),
            comps.len()
        )));
    }
    let mut comp_of = vec![0; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    for (tree, class) in dec.blue.iter().enumerate() {
        let mut inside = vec![0usize; comps.len()];
        for &e in class {
            inside[comp_of[g.endpoints(e).0]] += 1;
        }
        for (i, c) in comps.iter().enumerate() {
            if dec.spanning[i] && inside[i] + 1 != c.len() {
                return Err(Violation::BlueNotSpanning { tree, vertex: c[0] });
            }
        }
    }

    let mut class_of = vec![None; g.m()];
    for (i, class) in dec.blue.iter().enumerate() {
        for &e in class {
            class_of[e] = Some(i);
        }
    }
    let mut oriented = vec![false; g.m()];
    let mut has_parent = vec![vec![false; g.n()]; dec.k];
    let bad = |tree: usize, vertex: Vertex, detail: String| Violation::BadOrientation { tree, vertex, detail };
    for &[child, parent, e] in &dec.orientations {
        let Some(tree) = class_of.get(e).copied().flatten() else {
            return Err(bad(0, child, format!("edge {e} is not blue")));
        };
        let (a, b) = g.endpoints(e);
        if (a, b) != (child, parent) && (b, a) != (child, parent) {
            return Err(bad(tree, child, format!("edge {e} does not join {child} and {parent}")));
        }
        if std::mem::replace(&mut oriented[e], true) {
            return Err(bad(tree, child, format!("edge {e} oriented twice")));
        }
        if std::mem::replace(&mut has_parent[tree][child], true) {
            return Err(bad(tree, child, "two parent edges".into()));
        }
    }
    if let Some(e) = (0..g.m()).find(|&e| class_of[e].is_some() && !oriented[e]) {
        return Err(bad(class_of[e].unwrap_or(0), g.endpoints(e).0, format!("edge {e} has no orientation")));
    }
    if dec.root < g.n() {
        if let Some(tree) = (0..dec.k).find(|&t| has_parent[t][dec.root]) {
            return Err(bad(tree, dec.root, "root has a parent".into()));
        }
    }
    Ok(())
}

fn read_graph(path: &Path) -> Result<GraphFile, Report> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Report::fail(EXIT_PARSE, format!("cannot read {}: {e}\n", path.display())))?;
    parse_graph(&text).map_err(|e| Report::fail(EXIT_PARSE, format!("{}: {e}\n", path.display())))
}

pub fn cmd_arboricity(path: &Path) -> Report {
    let file = match read_graph(path) {
        Ok(f) => f,
        Err(r) => return r,
    };
    let gamma = fractional_arboricity(&file.graph);
    Report::ok(format!("gamma={gamma} arboricity={}\n", gamma.ceil()))
}

/// Runs the engine on each component with the user parameters mapped to
/// the engine bound, merges and validates.
pub fn sndt(g: &MultiGraph, k: usize, d: usize, opts: EngineOptions) -> Report {
    let bound = match component_bound(k, d) {
        Ok(b) => b,
        Err(e) => return Report::fail(EXIT_PRECONDITION, format!("{e}; need k >= 1 and 1 <= d <= 2(k+1)\n")),
    };
    let threshold = Rational::integer(k as i64) + chi(k, bound).expect("bound lies in range");
    let gamma = fractional_arboricity(g);
    if gamma > threshold {
        return Report::fail(
            EXIT_PRECONDITION,
            format!("density check failed: gamma={gamma} exceeds k+chi={threshold}\n"),
        );
    }

    let comps = g.components();
    let results: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = comps
            .iter()
            .filter(|c| c.len() >= 2)
            .map(|c| {
                s.spawn(move || {
                    let (sub, emap) = g.induced(c);
                    (c, emap, run(&sub, k, bound, opts))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });

    let mut blue: Vec<Vec<EdgeId>> = vec![Vec::new(); k];
    let mut red = Vec::new();
    let mut spanning = vec![true; comps.len()];
    let mut root = None;
    for (c, emap, out) in results {
        let ci = comps.iter().position(|x| x == c).expect("own component");
        match out {
            Ok(RunOutcome::Solved { split, .. }) => {
                root.get_or_insert(c[split.root]);
                spanning[ci] = split.spanning;
                for (b, part) in blue.iter_mut().zip(&split.blue) {
                    b.extend(part.iter().map(|&e| emap[e]));
                }
                red.extend(split.red.iter().map(|&e| emap[e]));
            }
            Ok(RunOutcome::Stuck { certificate, .. }) => {
                let stuck = serde_json::json!({
                    "certificate": CertificateJson::from_certificate(&certificate, c),
                    "d": bound,
                    "k": k,
                });
                return Report {
                    code: EXIT_STUCK,
                    stdout: to_json(&stuck),
                    stderr: "engine stuck: no improving move\n".into(),
                };
            }
            Err(e) => return Report::fail(EXIT_STUCK, format!("engine failed: {e}\n")),
        }
    }
    for b in &mut blue {
        b.sort_unstable();
    }
    red.sort_unstable();
    let split = ForestSplit {
        k,
        root: root.unwrap_or(0),
        blue,
        red,
        spanning: spanning.iter().all(|&s| s),
    };
    let json = DecompositionJson {
        k,
        d: bound,
        root: split.root,
        orientations: split.orientations(g).into_iter().map(|(c, p, e)| [c, p, e]).collect(),
        max_red_component_edges: split.max_red_component_edges(g),
        blue: split.blue,
        red: split.red,
        spanning,
        certificate: None,
    };
    if let Err(v) = verify_decomposition(g, &json) {
        return Report::fail(EXIT_VERIFY, format!("internal validation failed: {v}\n"));
    }
    Report::ok(to_json(&json))
}

pub fn cmd_sndt(path: &Path, k: usize, d: usize) -> Report {
    match read_graph(path) {
        Ok(f) => sndt(&f.graph, k, d, EngineOptions::from_env()),
        Err(r) => r,
    }
}

pub fn cmd_thintree(path: &Path, mode: CutMode) -> Report {
    let file = match read_graph(path) {
        Ok(f) => f,
        Err(r) => return r,
    };
    let Some(rotation) = file.rotation else {
        return Report::fail(EXIT_PRECONDITION, "graph file has no rotations section\n");
    };
    let result = EmbeddedGraph::new(file.graph, rotation).and_then(|eg| thin_tree(&eg, mode));
    match result {
        Ok(cert) => {
            let thin = cert.is_five_sixths_thin();
            Report {
                code: if thin { EXIT_OK } else { EXIT_VERIFY },
                stdout: to_json(&cert.to_json()),
                stderr: if thin {
                    String::new()
                } else {
                    format!("tree takes {} of a cut, above 5/6\n", cert.max_ratio)
                },
            }
        }
        Err(PlanarError::Stuck(c)) => {
            let stuck = serde_json::json!({
                "certificate": CertificateJson::from_certificate(&c, &(0..c.decomposition.graph().n()).collect::<Vec<_>>()),
            });
            Report {
                code: EXIT_STUCK,
                stdout: to_json(&stuck),
                stderr: "engine stuck on the dual\n".into(),
            }
        }
        Err(e) => Report::fail(EXIT_PRECONDITION, format!("{e}\n")),
    }
}

pub fn cmd_verify(graph: &Path, decomposition: &Path) -> Report {
    let file = match read_graph(graph) {
        Ok(f) => f,
        Err(r) => return r,
    };
    let dec: DecompositionJson = match std::fs::read_to_string(decomposition)
        .map_err(|e| e.to_string())
        .and_then(|s| serde_json::from_str(&s).map_err(|e| e.to_string()))
    {
        Ok(d) => d,
        Err(e) => return Report::fail(EXIT_PARSE, format!("{}: {e}\n", decomposition.display())),
    };
    match verify_decomposition(&file.graph, &dec) {
        Ok(()) => Report::ok("PASS\n".into()),
        Err(v) => Report {
            code: EXIT_VERIFY,
            stdout: format!("FAIL: {v}\n"),
            stderr: String::new(),
        },
    }
}

pub fn execute(cli: Cli) -> Report {
    match cli.command {
        Command::Arboricity { file } => cmd_arboricity(&file),
        Command::Sndt { file, k, d } => cmd_sndt(&file, k, d),
        Command::Thintree { file, verify } => cmd_thintree(&file, verify),
        Command::Verify { graph, decomposition } => cmd_verify(&graph, &decomposition),
    }
}

/// Parses `args`, runs the command, prints its output and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let report = execute(cli);
    print!("{}", report.stdout);
    eprint!("{}", report.stderr);
    report.code
}
