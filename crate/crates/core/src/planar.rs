//! Embedded planar graphs, duals, and thin spanning trees.
//!
//! An embedding is a rotation system: for each vertex, the cyclic order of
//! its incident edge ids. Faces are the orbits of the dart map "reverse the
//! dart, then step to the rotation successor".

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::density::fractional_arboricity;
use crate::engine::{run, DensityCertificate, EngineError, EngineOptions, ForestSplit, RunOutcome};
use crate::flow::FlowNetwork;
use crate::graph::{EdgeId, GraphError, MultiGraph, UnionFind, Vertex};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarError {
    #[error("rotation covers {found} vertices, graph has {expected}")]
    RotationLength { expected: usize, found: usize },
    #[error("rotation at vertex {0} does not list exactly its incident edges")]
    RotationMismatch(Vertex),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least two vertices")]
    TooSmall,
    #[error("rotation system is not planar: v - e + f = {0}")]
    NotPlanar(i64),
    #[error("edge {0} is a bridge, so the dual has a loop")]
    Bridge(EdgeId),
    #[error("girth {found} is below {required}")]
    GirthTooSmall { found: usize, required: usize },
    #[error("graph has parallel edges")]
    NotSimple,
    #[error("fractional arboricity {gamma} exceeds {limit}")]
    DensityViolated { gamma: Rational, limit: Rational },
    #[error("edge connectivity {0} is below 5")]
    NotFiveEdgeConnected(usize),
    #[error("{0}")]
    Invariant(String),
    #[error("{vertices} vertices is too many for exhaustive cut enumeration (limit 24)")]
    TooLarge { vertices: usize },
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("engine stuck: exploration density {}", .0.density)]
    Stuck(Box<DensityCertificate>),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An edge traversed from `tail` to the other endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dart {
    pub edge: EdgeId,
    pub tail: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Boundary vertices in traversal order.
    pub fn vertices(&self) -> Vec<Vertex> {
        self.darts.iter().map(|d| d.tail).collect()
    }
}

/// A connected multigraph with a planar rotation system.
#[derive(Clone, Debug)]
pub struct EmbeddedGraph {
    graph: MultiGraph,
    rotation: Vec<Vec<EdgeId>>,
    faces: Vec<Face>,
    /// Face index of the dart `2e` (from the first endpoint) and `2e + 1`.
    face_of: Vec<usize>,
}

impl EmbeddedGraph {
    /// Validates the rotation, traces the faces and checks Euler's formula.
    pub fn new(graph: MultiGraph, rotation: Vec<Vec<EdgeId>>) -> Result<Self, PlanarError> {
        let n = graph.n();
        if rotation.len() != n {
            return Err(PlanarError::RotationLength {
                expected: n,
                found: rotation.len(),
            });
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut a = rot.clone();
            let mut b = graph.incident(v).to_vec();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Err(PlanarError::RotationMismatch(v));
            }
        }
        if !graph.is_connected() {
            return Err(PlanarError::Disconnected);
        }
        let mut eg = EmbeddedGraph {
            graph,
            rotation,
            faces: Vec::new(),
            face_of: Vec::new(),
        };
        eg.trace_faces();
        let euler = n as i64 - eg.graph.m() as i64 + eg.faces.len() as i64;
        if euler != 2 {
            return Err(PlanarError::NotPlanar(euler));
        }
        Ok(eg)
    }

    /// Builds a simple embedded graph from its faces, each a vertex cycle,
    /// all oriented the same way. Edges are numbered by first appearance.
    pub fn from_faces(n: usize, faces: &[Vec<Vertex>]) -> Result<Self, PlanarError> {
        let mut g = MultiGraph::new(n);
        let mut ids: HashMap<(Vertex, Vertex), EdgeId> = HashMap::new();
        let mut id = |g: &mut MultiGraph, a: Vertex, b: Vertex| -> Result<EdgeId, PlanarError> {
            let key = (a.min(b), a.max(b));
            if let Some(&e) = ids.get(&key) {
                return Ok(e);
            }
            let e = g.add_edge(a, b)?;
            ids.insert(key, e);
            Ok(e)
        };
        // succ[v]: incoming edge -> outgoing edge along some face
        let mut succ: Vec<HashMap<EdgeId, EdgeId>> = vec![HashMap::new(); n];
        for f in faces {
            let l = f.len();
            for i in 0..l {
                let (p, v, q) = (f[(i + l - 1) % l], f[i], f[(i + 1) % l]);
                let into = id(&mut g, p, v)?;
                let out = id(&mut g, v, q)?;
                succ[v].insert(into, out);
            }
        }
        let mut rotation = Vec::with_capacity(n);
        for (v, s) in succ.iter().enumerate() {
            let Some(&start) = g.incident(v).iter().min() else {
                rotation.push(Vec::new());
                continue;
            };
            let mut rot = vec![start];
            let mut cur = start;
            while let Some(&next) = s.get(&cur) {
                if next == start {
                    break;
                }
                if rot.len() > g.degree(v) {
                    return Err(PlanarError::RotationMismatch(v));
                }
                rot.push(next);
                cur = next;
            }
            rotation.push(rot);
        }
        EmbeddedGraph::new(g, rotation)
    }

    fn trace_faces(&mut self) {
        let m = self.graph.m();
        let mut slot: HashMap<(Vertex, EdgeId), usize> = HashMap::new();
        for (v, rot) in self.rotation.iter().enumerate() {
            for (i, &e) in rot.iter().enumerate() {
                slot.insert((v, e), i);
            }
        }
        let dart_index = |d: Dart| 2 * d.edge + usize::from(self.graph.endpoints(d.edge).0 != d.tail);
        let mut face_of = vec![usize::MAX; 2 * m];
        let mut faces = Vec::new();
        for start in 0..2 * m {
            if face_of[start] != usize::MAX {
                continue;
            }
            let (a, b) = self.graph.endpoints(start / 2);
            let first = Dart {
                edge: start / 2,
                tail: if start % 2 == 0 { a } else { b },
            };
            let mut darts = Vec::new();
            let mut d = first;
            loop {
                face_of[dart_index(d)] = faces.len();
                darts.push(d);
                let head = self.graph.other(d.edge, d.tail);
                let rot = &self.rotation[head];
                let next = rot[(slot[&(head, d.edge)] + 1) % rot.len()];
                d = Dart {
                    edge: next,
                    tail: head,
                };
                if d == first {
                    break;
                }
            }
            faces.push(Face { darts });
        }
        self.faces = faces;
        self.face_of = face_of;
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<EdgeId>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// The two faces on either side of `e` (equal for a bridge).
    pub fn faces_of(&self, e: EdgeId) -> (usize, usize) {
        (self.face_of[2 * e], self.face_of[2 * e + 1])
    }
}

/// The planar dual. Dual edge `i` crosses primal edge `phi[i]`.
#[derive(Clone, Debug)]
pub struct DualGraph {
    pub dual: MultiGraph,
    pub phi: Vec<EdgeId>,
    /// Rotation of each dual vertex: the edges of its face in boundary order.
    pub rotation: Vec<Vec<EdgeId>>,
}

impl DualGraph {
    /// The dual with its induced embedding.
    pub fn embedding(&self) -> Result<EmbeddedGraph, PlanarError> {
        EmbeddedGraph::new(self.dual.clone(), self.rotation.clone())
    }

    /// Primal edge ids of a set of dual edges.
    pub fn to_primal(&self, dual_edges: &[EdgeId]) -> Vec<EdgeId> {
        dual_edges.iter().map(|&e| self.phi[e]).collect()
    }
}

/// One dual vertex per face, one dual edge per primal edge. Fails on
/// bridges, since the dual multigraph has no loops.
pub fn dual_graph(eg: &EmbeddedGraph) -> Result<DualGraph, PlanarError> {
    let mut dual = MultiGraph::new(eg.faces().len());
    for e in 0..eg.graph().m() {
        let (f, h) = eg.faces_of(e);
        if f == h {
            return Err(PlanarError::Bridge(e));
        }
        dual.add_edge(f, h)?;
    }
    let rotation = eg
        .faces()
        .iter()
        .map(|f| f.darts.iter().map(|d| d.edge).collect())
        .collect();
    Ok(DualGraph {
        dual,
        phi: (0..eg.graph().m()).collect(),
        rotation,
    })
}

/// Length of a shortest cycle, `None` for a forest.
pub fn girth(g: &MultiGraph) -> Option<usize> {
    if !g.is_simple() {
        return Some(2);
    }
    let n = g.n();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut via = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[v] + 1 >= b) {
                break;
            }
            for &e in g.incident(v) {
                let w = g.other(e, v);
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    via[w] = e;
                    queue.push_back(w);
                } else if via[v] != e {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Global minimum edge cut, by unit-capacity max flow from vertex 0 to
/// every other vertex.
pub fn edge_connectivity(g: &MultiGraph) -> Result<usize, PlanarError> {
    if g.n() < 2 {
        return Err(PlanarError::TooSmall);
    }
    if !g.is_connected() {
        return Err(PlanarError::Disconnected);
    }
    let mut net = FlowNetwork::new(g.n());
    for &(u, v) in g.edges() {
        net.add_edge(u, v, 1);
    }
    Ok((1..g.n())
        .map(|t| net.clone().max_flow(0, t) as usize)
        .min()
        .expect("at least two vertices"))
}

/// Splits a simple graph of girth at least five into a forest and a forest
/// whose components have at most five edges.
pub fn girth5_decompose(g: &MultiGraph) -> Result<ForestSplit, PlanarError> {
    if !g.is_simple() {
        return Err(PlanarError::NotSimple);
    }
    if let Some(found) = girth(g).filter(|&l| l < 5) {
        return Err(PlanarError::GirthTooSmall { found, required: 5 });
    }
    let limit = Rational::new(5, 3);
    let gamma = fractional_arboricity(g);
    if gamma > limit {
        return Err(PlanarError::DensityViolated { gamma, limit });
    }
    if !g.is_connected() {
        return Err(PlanarError::Disconnected);
    }
    match run(g, 1, 5, EngineOptions::from_env())? {
        RunOutcome::Solved { split, .. } => Ok(split),
        RunOutcome::Stuck { certificate, .. } => Err(PlanarError::Stuck(certificate)),
    }
}

/// Which bipartitions [`verify_thinness`] examines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutMode {
    /// All `2^(n-1) - 1` bipartitions; certifying.
    Exhaustive,
    /// `count` random bipartitions from a fixed seed; not certifying.
    Sampled { count: usize, seed: u64 },
}

impl fmt::Display for CutMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutMode::Exhaustive => write!(f, "exhaustive"),
            CutMode::Sampled { count, .. } => write!(f, "sampled:{count}"),
        }
    }
}

/// Largest tree share of a cut seen, with the side that attains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutReport {
    pub max_ratio: Rational,
    /// The side of the worst cut not containing vertex 0.
    pub worst_cut: Vec<Vertex>,
    pub cuts_examined: u64,
}

/// Maximum of `|E(T) ∩ δ(A)| / |δ(A)|` over the bipartitions chosen by `mode`.
///
/// Bipartition cuts are enough: every cut-set is an edge-disjoint union of
/// bonds, and the ratio of a union is at most the largest ratio of its parts.
pub fn verify_thinness(g: &MultiGraph, tree: &[EdgeId], mode: CutMode) -> Result<CutReport, PlanarError> {
    let n = g.n();
    if n < 2 {
        return Err(PlanarError::TooSmall);
    }
    let mut in_tree = vec![false; g.m()];
    for &e in tree {
        in_tree[e] = true;
    }
    let mut best = (0u64, 1u64);
    let mut worst = Vec::new();
    let mut side = vec![false; n];
    let mut examined = 0;
    let mut consider = |side: &[bool], cut: u64, hit: u64| {
        if cut == 0 {
            return;
        }
        examined += 1;
        if hit * best.1 > best.0 * cut || worst.is_empty() {
            best = (hit, cut);
            worst = (0..n).filter(|&v| side[v]).collect();
        }
    };
    match mode {
        CutMode::Exhaustive => {
            if n > 24 {
                return Err(PlanarError::TooLarge { vertices: n });
            }
            // Gray code over vertices 1..n: one vertex changes side per step
            let (mut cut, mut hit) = (0u64, 0u64);
            for i in 1u64..(1 << (n - 1)) {
                let v = i.trailing_zeros() as usize + 1;
                for &e in g.incident(v) {
                    let w = g.other(e, v);
                    let t = u64::from(in_tree[e]);
                    if side[v] == side[w] {
                        cut += 1;
                        hit += t;
                    } else {
                        cut -= 1;
                        hit -= t;
                    }
                }
                side[v] = !side[v];
                consider(&side, cut, hit);
            }
        }
        CutMode::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                for s in side.iter_mut().skip(1) {
                    *s = rng.gen();
                }
                let (mut cut, mut hit) = (0, 0);
                for (e, &(u, v)) in g.edges().iter().enumerate() {
                    if side[u] != side[v] {
                        cut += 1;
                        hit += u64::from(in_tree[e]);
                    }
                }
                consider(&side, cut, hit);
            }
        }
    }
    Ok(CutReport {
        max_ratio: Rational::new(best.0 as i64, best.1 as i64),
        worst_cut: worst,
        cuts_examined: examined,
    })
}

/// A spanning tree and the largest share it takes of any examined cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinTreeCertificate {
    pub tree: Vec<EdgeId>,
    pub max_ratio: Rational,
    pub mode: CutMode,
    pub worst_cut: Vec<Vertex>,
}

impl ThinTreeCertificate {
    pub fn is_five_sixths_thin(&self) -> bool {
        self.max_ratio <= Rational::new(5, 6)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "tree": self.tree,
            "max_ratio": self.max_ratio.to_string(),
            "mode": self.mode.to_string(),
            "worst_cut": self.worst_cut,
        })
    }
}

/// A 5/6-thin spanning tree of a 5-edge-connected embedded planar graph.
///
/// The dual has girth at least five, so it splits into a forest `T'` and a
/// forest `F'` with components of at most five edges. The primal edges of
/// `F'` form a connected spanning subgraph; pruning its cycles gives the tree.
pub fn thin_tree(eg: &EmbeddedGraph, mode: CutMode) -> Result<ThinTreeCertificate, PlanarError> {
    let g = eg.graph();
    let lambda = edge_connectivity(g)?;
    if lambda < 5 {
        return Err(PlanarError::NotFiveEdgeConnected(lambda));
    }
    let dual = dual_graph(eg)?;
    if !dual.dual.is_simple() {
        return Err(PlanarError::Invariant("dual of a 5-edge-connected graph has parallel edges".into()));
    }
    match girth(&dual.dual) {
        Some(l) if l < 5 => {
            return Err(PlanarError::Invariant(format!("dual girth {l} is below 5")));
        }
        _ => {}
    }
    let split = girth5_decompose(&dual.dual)?;
    let mut f = dual.to_primal(&split.red);
    f.sort_unstable();

    // removing the largest-id edge on a cycle until none is left keeps
    // exactly the edges Kruskal accepts in increasing id order
    let mut uf = UnionFind::new(g.n());
    let tree: Vec<EdgeId> = f
        .iter()
        .copied()
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            uf.union(u, v)
        })
        .collect();
    if tree.len() + 1 != g.n() {
        return Err(PlanarError::Invariant("primal image of the bounded forest is not connected".into()));
    }
    let report = verify_thinness(g, &tree, mode)?;
    Ok(ThinTreeCertificate {
        tree,
        max_ratio: report.max_ratio,
        mode,
        worst_cut: report.worst_cut,
    })
}

/// Standard embeddings used by tests and examples.
pub mod solids {
    use super::EmbeddedGraph;

    fn build(n: usize, faces: Vec<Vec<usize>>) -> EmbeddedGraph {
        EmbeddedGraph::from_faces(n, &faces).expect("hand-built polyhedron is planar")
    }

    pub fn triangle() -> EmbeddedGraph {
        build(3, vec![vec![0, 1, 2], vec![0, 2, 1]])
    }

    pub fn cube() -> EmbeddedGraph {
        let mut faces = vec![vec![0, 3, 2, 1], vec![4, 5, 6, 7]];
        for i in 0..4 {
            let j = (i + 1) % 4;
            faces.push(vec![i, j, j + 4, i + 4]);
        }
        build(8, faces)
    }

    /// Apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
    pub fn icosahedron() -> EmbeddedGraph {
        let up = |i: usize| 1 + i % 5;
        let lo = |i: usize| 6 + i % 5;
        let mut faces = Vec::new();
        for i in 0..5 {
            faces.push(vec![0, up(i), up(i + 1)]);
            faces.push(vec![up(i), lo(i), up(i + 1)]);
            faces.push(vec![up(i + 1), lo(i), lo(i + 1)]);
            faces.push(vec![11, lo(i + 1), lo(i)]);
        }
        build(12, faces)
    }

    /// The dual of [`icosahedron`].
    pub fn dodecahedron() -> EmbeddedGraph {
        super::dual_graph(&icosahedron())
            .and_then(|d| d.embedding())
            .expect("dual of a polyhedron is a polyhedron")
    }
}

#[cfg(test)]
mod tests {
    use super::solids::*;
    use super::*;

    fn lengths(eg: &EmbeddedGraph) -> Vec<usize> {
        let mut l: Vec<usize> = eg.faces().iter().map(Face::len).collect();
        l.sort_unstable();
        l
    }

    fn degrees(g: &MultiGraph) -> Vec<usize> {
        let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn face_tracing() {
        assert_eq!(lengths(&triangle()), vec![3, 3]);
        assert_eq!(lengths(&cube()), vec![4; 6]);
        let digon = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let eg = EmbeddedGraph::new(digon, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(lengths(&eg), vec![2, 2]);
    }

    #[test]
    fn bad_rotations_rejected() {
        // K4 with one vertex's rotation flipped has genus one
        let k4 = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]).unwrap();
        let good = vec![vec![0, 1, 2], vec![0, 5, 3], vec![1, 3, 4], vec![2, 4, 5]];
        assert!(EmbeddedGraph::new(k4.clone(), good.clone()).is_ok());
        let mut bad = good.clone();
        bad[0] = vec![0, 2, 1];
        assert!(matches!(EmbeddedGraph::new(k4.clone(), bad), Err(PlanarError::NotPlanar(_))));
        let mut missing = good;
        missing[1] = vec![0, 5];
        assert_eq!(EmbeddedGraph::new(k4, missing).unwrap_err(), PlanarError::RotationMismatch(1));
    }

    #[test]
    fn duals() {
        let t = dual_graph(&triangle()).unwrap();
        assert_eq!((t.dual.n(), t.dual.m()), (2, 3));
        let oct = dual_graph(&cube()).unwrap();
        assert_eq!((oct.dual.n(), oct.dual.m()), (6, 12));
        assert_eq!(degrees(&oct.dual), vec![4; 6]);
        let dod = dual_graph(&icosahedron()).unwrap();
        assert_eq!((dod.dual.n(), dod.dual.m()), (20, 30));
        assert_eq!(degrees(&dod.dual), vec![3; 20]);
        assert_eq!(girth(&dod.dual), Some(5));
        // the dual of the dual has the primal degree sequence
        let back = dual_graph(&dod.embedding().unwrap()).unwrap();
        assert_eq!(degrees(&back.dual), degrees(icosahedron().graph()));
    }

    #[test]
    fn girth_values() {
        let c5 = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(girth(&c5), Some(5));
        assert_eq!(girth(&MultiGraph::from_edges(2, &[(0, 1), (1, 0)]).unwrap()), Some(2));
        assert_eq!(girth(&MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()), None);
        assert_eq!(girth(icosahedron().graph()), Some(3));
        assert_eq!(girth(cube().graph()), Some(4));
    }

    #[test]
    fn connectivity() {
        let path = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(edge_connectivity(&path).unwrap(), 1);
        let c4 = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(edge_connectivity(&c4).unwrap(), 2);
        assert_eq!(edge_connectivity(icosahedron().graph()).unwrap(), 5);
        assert_eq!(edge_connectivity(cube().graph()).unwrap(), 3);
        assert_eq!(edge_connectivity(&MultiGraph::new(3)).unwrap_err(), PlanarError::Disconnected);
    }

    #[test]
    fn thinness_examples() {
        let star = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = verify_thinness(&star, &[0, 1, 2], CutMode::Exhaustive).unwrap();
        assert_eq!(r.max_ratio, Rational::integer(1));
        assert_eq!(r.cuts_examined, 7);
        let c4 = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let r = verify_thinness(&c4, &[0, 1, 2], CutMode::Exhaustive).unwrap();
        assert_eq!(r.max_ratio, Rational::integer(1));
        let doubled = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (0, 1), (1, 2)]).unwrap();
        let r = verify_thinness(&doubled, &[0, 1], CutMode::Exhaustive).unwrap();
        assert_eq!(r.max_ratio, Rational::new(1, 2));
        let s = verify_thinness(&c4, &[0, 1, 2], CutMode::Sampled { count: 50, seed: 1 }).unwrap();
        assert!(s.max_ratio <= Rational::integer(1));
    }

    #[test]
    fn icosahedron_thin_tree() {
        let cert = thin_tree(&icosahedron(), CutMode::Exhaustive).unwrap();
        assert_eq!(cert.tree.len(), 11);
        assert!(cert.is_five_sixths_thin(), "{}", cert.max_ratio);
    }

    #[test]
    fn thin_tree_preconditions() {
        assert_eq!(
            thin_tree(&cube(), CutMode::Exhaustive).unwrap_err(),
            PlanarError::NotFiveEdgeConnected(3)
        );
        let dod = dodecahedron();
        let split = girth5_decompose(dod.graph()).unwrap();
        split.check(dod.graph(), Some(5)).unwrap();
        assert!(matches!(
            girth5_decompose(icosahedron().graph()),
            Err(PlanarError::GirthTooSmall { found: 3, .. })
        ));
    }
}
