//! Multigraphs, oriented spanning trees and the blue/red decomposition model.
//!
//! Vertices are dense ids `0..n`. Edges are identified by their index in the
//! edge list, so parallel edges stay distinguishable through every exchange.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: EdgeId, vertex: Vertex },
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge {edge} out of range (m = {m})")]
    EdgeOutOfRange { edge: EdgeId, m: usize },
    #[error("vertex {b} is not an ancestor of {a}")]
    NotDescendant { a: Vertex, b: Vertex },
    #[error("vertices {a} and {b} lie in different red components")]
    DifferentComponents { a: Vertex, b: Vertex },
    #[error("edge set is not a spanning tree: {0}")]
    NotSpanningTree(String),
}

/// Loopless multigraph with stable edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    incident: Vec<Vec<EdgeId>>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph {
            n,
            edges: Vec::new(),
            incident: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = MultiGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId, GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        let id = self.edges.len();
        if u == v {
            return Err(GraphError::Loop { edge: id, vertex: u });
        }
        self.edges.push((u, v));
        self.incident[u].push(id);
        self.incident[v].push(id);
        Ok(id)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// The endpoint of `e` opposite to `v`.
    pub fn other(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incident[v].len()
    }

    /// True when no two edges share both endpoints.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| seen.insert((u.min(v), u.max(v))))
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &e in &self.incident[v] {
                    let w = self.other(e, v);
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Number of edges with both endpoints flagged in `mask`.
    pub fn edges_within(&self, mask: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| mask[u] && mask[v])
            .count()
    }

    /// Induced subgraph on `vertices` (in the given order). Returns the
    /// subgraph and, for each new edge id, the original edge id.
    pub fn induced(&self, vertices: &[Vertex]) -> (MultiGraph, Vec<EdgeId>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut sub = MultiGraph::new(vertices.len());
        let mut emap = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                sub.add_edge(local[u], local[v])
                    .expect("induced edge endpoints are in range and distinct");
                emap.push(e);
            }
        }
        (sub, emap)
    }
}

/// Disjoint-set forest with path halving.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// A spanning tree whose edges point towards `root` through parent links.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedTree {
    root: Vertex,
    parent: Vec<Option<(Vertex, EdgeId)>>,
}

impl OrientedTree {
    /// Builds the tree from raw parent links without checking them.
    pub fn from_parents(root: Vertex, parent: Vec<Option<(Vertex, EdgeId)>>) -> Self {
        OrientedTree { root, parent }
    }

    /// Orients the undirected spanning tree `edges` of `g` towards `root`.
    pub fn from_edges<I>(g: &MultiGraph, edges: I, root: Vertex) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = EdgeId>,
    {
        let n = g.n();
        if root >= n {
            return Err(GraphError::VertexOutOfRange { vertex: root, n });
        }
        let mut adj: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
        let mut count = 0;
        for e in edges {
            if e >= g.m() {
                return Err(GraphError::EdgeOutOfRange { edge: e, m: g.m() });
            }
            let (u, v) = g.endpoints(e);
            adj[u].push(e);
            adj[v].push(e);
            count += 1;
        }
        if count + 1 != n {
            return Err(GraphError::NotSpanningTree(format!(
                "{count} edges on {n} vertices"
            )));
        }
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &e in &adj[v] {
                let w = g.other(e, v);
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((v, e));
                    queue.push_back(w);
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(GraphError::NotSpanningTree(format!(
                "vertex {v} not reached"
            )));
        }
        Ok(OrientedTree { root, parent })
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: Vertex) -> Option<(Vertex, EdgeId)> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<(Vertex, EdgeId)>] {
        &self.parent
    }

    /// Edge ids of the tree, in vertex order of their tails.
    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.parent.iter().filter_map(|p| p.map(|(_, e)| e))
    }

    /// Child lists derived from the parent links.
    pub fn children(&self) -> Vec<Vec<Vertex>> {
        let mut ch = vec![Vec::new(); self.n()];
        for (v, p) in self.parent.iter().enumerate() {
            if let Some((u, _)) = p {
                ch[*u].push(v);
            }
        }
        ch
    }

    fn check(&self, v: Vertex) -> Result<(), GraphError> {
        if v >= self.n() {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// True iff `b` lies on the parent walk from `a` to the root, i.e. `a` is
    /// a descendant of `b`. Reflexive.
    pub fn is_descendant(&self, a: Vertex, b: Vertex) -> Result<bool, GraphError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.descends(a, b))
    }

    pub(crate) fn descends(&self, mut a: Vertex, b: Vertex) -> bool {
        loop {
            if a == b {
                return true;
            }
            match self.parent[a] {
                Some((p, _)) => a = p,
                None => return false,
            }
        }
    }

    /// The directed path from `a` up to its ancestor `b`.
    pub fn tree_path(&self, a: Vertex, b: Vertex) -> Result<Vec<Vertex>, GraphError> {
        self.check(a)?;
        self.check(b)?;
        let mut path = vec![a];
        let mut cur = a;
        while cur != b {
            match self.parent[cur] {
                Some((p, _)) => {
                    path.push(p);
                    cur = p;
                }
                None => return Err(GraphError::NotDescendant { a, b }),
            }
        }
        Ok(path)
    }

    /// Same undirected tree oriented towards `root`.
    pub fn reroot(&self, g: &MultiGraph, root: Vertex) -> OrientedTree {
        if root == self.root {
            return self.clone();
        }
        OrientedTree::from_edges(g, self.edge_ids(), root)
            .expect("rerooting a spanning tree keeps it spanning")
    }
}

/// Color of an edge inside a [`Decomposition`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeColor {
    Blue(usize),
    Red,
}

/// `k` spanning trees oriented towards a common root ("blue") together with an
/// undirected forest ("red") partitioning the edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    graph: Arc<MultiGraph>,
    root: Vertex,
    blue: Vec<OrientedTree>,
    red: BTreeSet<EdgeId>,
}

impl Decomposition {
    /// Assembles a decomposition without checking it; see [`Decomposition::validate`].
    pub fn new(
        graph: Arc<MultiGraph>,
        root: Vertex,
        blue: Vec<OrientedTree>,
        red: BTreeSet<EdgeId>,
    ) -> Self {
        Decomposition {
            graph,
            root,
            blue,
            red,
        }
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<MultiGraph> {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.blue.len()
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn blue(&self) -> &[OrientedTree] {
        &self.blue
    }

    pub fn tree(&self, i: usize) -> &OrientedTree {
        &self.blue[i]
    }

    pub fn red(&self) -> &BTreeSet<EdgeId> {
        &self.red
    }

    pub fn is_red(&self, e: EdgeId) -> bool {
        self.red.contains(&e)
    }

    /// Color of every edge; edges claimed by nobody are reported as red.
    pub fn colors(&self) -> Vec<EdgeColor> {
        let mut c = vec![EdgeColor::Red; self.graph.m()];
        for (i, t) in self.blue.iter().enumerate() {
            for e in t.edge_ids() {
                c[e] = EdgeColor::Blue(i);
            }
        }
        c
    }

    /// Blue edge ids of tree `i`, sorted.
    pub fn blue_edges(&self, i: usize) -> Vec<EdgeId> {
        let mut v: Vec<_> = self.blue[i].edge_ids().collect();
        v.sort_unstable();
        v
    }

    /// All blue trees re-parented towards `root`.
    pub fn reroot(&self, root: Vertex) -> Decomposition {
        Decomposition {
            graph: self.graph.clone(),
            root,
            blue: self.blue.iter().map(|t| t.reroot(&self.graph, root)).collect(),
            red: self.red.clone(),
        }
    }

    pub(crate) fn with_parts(&self, blue: Vec<OrientedTree>, red: BTreeSet<EdgeId>) -> Decomposition {
        Decomposition {
            graph: self.graph.clone(),
            root: self.root,
            blue,
            red,
        }
    }

    pub fn red_forest(&self) -> RedForest {
        RedForest::new(&self.graph, self.red.iter().copied())
    }

    pub fn red_components(&self) -> Vec<RedComponent> {
        self.red_forest().components
    }

    /// Unique red path from `a` to `b`.
    pub fn red_path(&self, a: Vertex, b: Vertex) -> Result<Vec<Vertex>, GraphError> {
        self.red_forest().path(a, b)
    }

    /// Largest red component size in edges.
    pub fn max_red_component_edges(&self) -> usize {
        self.red_components()
            .iter()
            .map(|c| c.edge_count)
            .max()
            .unwrap_or(0)
    }

    /// Canonical color vector used to detect repeated states.
    pub fn fingerprint(&self) -> Vec<u32> {
        self.colors()
            .into_iter()
            .map(|c| match c {
                EdgeColor::Blue(i) => i as u32,
                EdgeColor::Red => u32::MAX,
            })
            .collect()
    }

    /// Checks every structural invariant and reports the first violation.
    pub fn validate(&self) -> Result<(), Violation> {
        let g = &*self.graph;
        let n = g.n();
        let mut owner: Vec<Option<EdgeColor>> = vec![None; g.m()];
        for (i, t) in self.blue.iter().enumerate() {
            if t.root() != self.root {
                return Err(Violation::RootMismatch {
                    tree: i,
                    root: t.root(),
                    expected: self.root,
                });
            }
            if t.n() != n {
                return Err(Violation::BlueNotSpanning { tree: i, vertex: n.min(t.n()) });
            }
            for v in 0..n {
                match t.parent(v) {
                    None if v != self.root => {
                        return Err(Violation::BlueNotSpanning { tree: i, vertex: v })
                    }
                    Some(_) if v == self.root => {
                        return Err(Violation::BadOrientation {
                            tree: i,
                            vertex: v,
                            detail: "root has a parent".into(),
                        })
                    }
                    Some((p, e)) => {
                        if e >= g.m() {
                            return Err(Violation::BadOrientation {
                                tree: i,
                                vertex: v,
                                detail: format!("unknown edge {e}"),
                            });
                        }
                        let (a, b) = g.endpoints(e);
                        if !((a == v && b == p) || (a == p && b == v)) {
                            return Err(Violation::BadOrientation {
                                tree: i,
                                vertex: v,
                                detail: format!("edge {e} does not join {v} and {p}"),
                            });
                        }
                        if owner[e].is_some() {
                            return Err(Violation::NotAPartition {
                                edge: e,
                                reason: PartitionFault::Duplicated,
                            });
                        }
                        owner[e] = Some(EdgeColor::Blue(i));
                    }
                    None => {}
                }
            }
            // every parent walk must end at the root
            let mut state = vec![0u8; n];
            for s in 0..n {
                let mut walk = Vec::new();
                let mut v = s;
                while state[v] == 0 {
                    state[v] = 1;
                    walk.push(v);
                    match t.parent(v) {
                        Some((p, _)) => v = p,
                        None => break,
                    }
                }
                if state[v] == 1 && t.parent(v).is_some() {
                    return Err(Violation::BadOrientation {
                        tree: i,
                        vertex: v,
                        detail: "parent links form a cycle".into(),
                    });
                }
                for w in walk {
                    state[w] = 2;
                }
            }
        }
        for &e in &self.red {
            if e >= g.m() {
                return Err(Violation::NotAPartition {
                    edge: e,
                    reason: PartitionFault::Unknown,
                });
            }
            if owner[e].is_some() {
                return Err(Violation::NotAPartition {
                    edge: e,
                    reason: PartitionFault::Duplicated,
                });
            }
            owner[e] = Some(EdgeColor::Red);
        }
        if let Some(e) = owner.iter().position(Option::is_none) {
            return Err(Violation::NotAPartition {
                edge: e,
                reason: PartitionFault::Missing,
            });
        }
        if let Some(cycle) = find_cycle(g, self.red.iter().copied()) {
            return Err(Violation::RedCycle { edges: cycle });
        }
        Ok(())
    }
}

/// Returns the edge ids of some cycle in the edge set, if it has one.
pub fn find_cycle<I>(g: &MultiGraph, edges: I) -> Option<Vec<EdgeId>>
where
    I: IntoIterator<Item = EdgeId>,
{
    let mut accepted = Vec::new();
    let mut uf = UnionFind::new(g.n());
    for e in edges {
        let (u, v) = g.endpoints(e);
        if !uf.union(u, v) {
            let forest = RedForest::new(g, accepted.iter().copied());
            let mut cycle = forest.path_edges(u, v).expect("endpoints already joined");
            cycle.push(e);
            cycle.sort_unstable();
            return Some(cycle);
        }
        accepted.push(e);
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionFault {
    Missing,
    Duplicated,
    Unknown,
}

/// First broken invariant found by a checker, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("not a partition: edge {edge} is {reason:?}")]
    NotAPartition { edge: EdgeId, reason: PartitionFault },
    #[error("red not a forest: cycle {edges:?}")]
    RedCycle { edges: Vec<EdgeId> },
    #[error("blue forest {tree} not a forest: cycle {edges:?}")]
    BlueCycle { tree: usize, edges: Vec<EdgeId> },
    #[error("blue tree {tree} does not span: vertex {vertex} uncovered")]
    BlueNotSpanning { tree: usize, vertex: Vertex },
    #[error("blue tree {tree} rooted at {root}, expected {expected}")]
    RootMismatch {
        tree: usize,
        root: Vertex,
        expected: Vertex,
    },
    #[error("blue tree {tree} badly oriented at vertex {vertex}: {detail}")]
    BadOrientation {
        tree: usize,
        vertex: Vertex,
        detail: String,
    },
    #[error("red component {component:?} has {edges} edges, bound is {bound}")]
    ComponentTooLarge {
        component: Vec<Vertex>,
        edges: usize,
        bound: usize,
    },
    #[error("claim mismatch: {0}")]
    ClaimMismatch(String),
}

/// A connected component of the red forest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RedComponent {
    /// Smallest member vertex.
    pub id: Vertex,
    /// Sorted member vertices.
    pub vertices: Vec<Vertex>,
    pub edge_count: usize,
}

/// Adjacency view of a forest with component labels.
#[derive(Clone, Debug)]
pub struct RedForest {
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    comp_of: Vec<usize>,
    components: Vec<RedComponent>,
}

impl RedForest {
    pub fn new<I: IntoIterator<Item = EdgeId>>(g: &MultiGraph, edges: I) -> Self {
        let n = g.n();
        let mut adj = vec![Vec::new(); n];
        for e in edges {
            let (u, v) = g.endpoints(e);
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        let mut comp_of = vec![usize::MAX; n];
        let mut components = Vec::new();
        for s in 0..n {
            if comp_of[s] != usize::MAX {
                continue;
            }
            let cid = components.len();
            comp_of[s] = cid;
            let mut members = vec![s];
            let mut degree_sum = 0;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                degree_sum += adj[v].len();
                for &(w, _) in &adj[v] {
                    if comp_of[w] == usize::MAX {
                        comp_of[w] = cid;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            components.push(RedComponent {
                id: s,
                vertices: members,
                edge_count: degree_sum / 2,
            });
        }
        RedForest {
            adj,
            comp_of,
            components,
        }
    }

    pub fn components(&self) -> &[RedComponent] {
        &self.components
    }

    /// Index into [`RedForest::components`] of the component holding `v`.
    pub fn component_index(&self, v: Vertex) -> usize {
        self.comp_of[v]
    }

    pub fn component_of(&self, v: Vertex) -> &RedComponent {
        &self.components[self.comp_of[v]]
    }

    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    fn walk(&self, a: Vertex, b: Vertex) -> Result<Vec<(Vertex, Option<EdgeId>)>, GraphError> {
        if self.comp_of[a] != self.comp_of[b] {
            return Err(GraphError::DifferentComponents { a, b });
        }
        let mut prev: Vec<Option<(Vertex, EdgeId)>> = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[a] = true;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            if v == b {
                break;
            }
            for &(w, e) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((v, e));
                    queue.push_back(w);
                }
            }
        }
        let mut out = vec![(b, None)];
        let mut cur = b;
        while let Some((p, e)) = prev[cur] {
            out.last_mut().unwrap().1 = Some(e);
            out.push((p, None));
            cur = p;
        }
        out.reverse();
        // out[i].1 now refers to the edge leading into out[i] from out[i-1];
        // shift so that out[i].1 is the edge from out[i] to out[i+1].
        let mut fixed = Vec::with_capacity(out.len());
        for i in 0..out.len() {
            let next_edge = if i + 1 < out.len() { out[i + 1].1 } else { None };
            fixed.push((out[i].0, next_edge));
        }
        Ok(fixed)
    }

    /// Vertices of the unique forest path from `a` to `b`.
    pub fn path(&self, a: Vertex, b: Vertex) -> Result<Vec<Vertex>, GraphError> {
        Ok(self.walk(a, b)?.into_iter().map(|(v, _)| v).collect())
    }

    /// Edge ids of the unique forest path from `a` to `b`, in walking order.
    pub fn path_edges(&self, a: Vertex, b: Vertex) -> Result<Vec<EdgeId>, GraphError> {
        Ok(self.walk(a, b)?.into_iter().filter_map(|(_, e)| e).collect())
    }

    /// Vertices reachable from `start` without passing through `blocked`.
    pub fn side_without(&self, start: Vertex, blocked: Vertex) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        if start == blocked {
            return seen;
        }
        seen[start] = true;
        seen[blocked] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen[blocked] = false;
        seen
    }
}

/// Checks a general `k`-forest-plus-red-forest split: the classes partition the
/// edges, each class is acyclic and, when `bound` is set, every red component
/// has at most `bound` edges.
pub fn check_forest_partition(
    g: &MultiGraph,
    blue: &[Vec<EdgeId>],
    red: &[EdgeId],
    bound: Option<usize>,
) -> Result<(), Violation> {
    let mut seen = vec![false; g.m()];
    for &e in blue.iter().flatten().chain(red) {
        if e >= g.m() {
            return Err(Violation::NotAPartition {
                edge: e,
                reason: PartitionFault::Unknown,
            });
        }
        if seen[e] {
            return Err(Violation::NotAPartition {
                edge: e,
                reason: PartitionFault::Duplicated,
            });
        }
        seen[e] = true;
    }
    if let Some(e) = seen.iter().position(|s| !s) {
        return Err(Violation::NotAPartition {
            edge: e,
            reason: PartitionFault::Missing,
        });
    }
    for (i, f) in blue.iter().enumerate() {
        if let Some(edges) = find_cycle(g, f.iter().copied()) {
            return Err(Violation::BlueCycle { tree: i, edges });
        }
    }
    if let Some(edges) = find_cycle(g, red.iter().copied()) {
        return Err(Violation::RedCycle { edges });
    }
    if let Some(bound) = bound {
        let forest = RedForest::new(g, red.iter().copied());
        if let Some(c) = forest.components().iter().find(|c| c.edge_count > bound) {
            return Err(Violation::ComponentTooLarge {
                component: c.vertices.clone(),
                edges: c.edge_count,
                bound,
            });
        }
    }
    Ok(())
}

/// True when every class in `forests` spans each connected component of `g`.
pub fn forests_span(g: &MultiGraph, forests: &[Vec<EdgeId>]) -> bool {
    let comps = g.components().len();
    forests.iter().all(|f| f.len() + comps == g.n())
}

impl fmt::Display for RedComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}({} edges on {:?})", self.id, self.edge_count, self.vertices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> (MultiGraph, OrientedTree) {
        // r=0 <- x=1 <- y=2
        let g = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let t = OrientedTree::from_edges(&g, [0, 1], 0).unwrap();
        (g, t)
    }

    #[test]
    fn loops_rejected() {
        assert!(matches!(
            MultiGraph::from_edges(2, &[(1, 1)]),
            Err(GraphError::Loop { .. })
        ));
        assert!(MultiGraph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn descendant_relation() {
        let (_, t) = chain();
        assert!(t.is_descendant(1, 1).unwrap());
        assert!(!t.is_descendant(0, 1).unwrap());
        assert!(t.is_descendant(2, 1).unwrap());
        assert!(t.is_descendant(2, 0).unwrap());
        assert!(t.is_descendant(5, 0).is_err());
    }

    #[test]
    fn tree_paths() {
        let (_, t) = chain();
        assert_eq!(t.tree_path(1, 1).unwrap(), vec![1]);
        assert_eq!(t.tree_path(2, 0).unwrap(), vec![2, 1, 0]);
        assert_eq!(t.tree_path(2, 1).unwrap(), vec![2, 1]);
        assert!(matches!(
            t.tree_path(0, 2),
            Err(GraphError::NotDescendant { .. })
        ));
    }

    fn dec_with_red(n: usize, edges: &[(usize, usize)], tree: &[EdgeId], red: &[EdgeId]) -> Decomposition {
        let g = Arc::new(MultiGraph::from_edges(n, edges).unwrap());
        let t = OrientedTree::from_edges(&g, tree.iter().copied(), 0).unwrap();
        Decomposition::new(g, 0, vec![t], red.iter().copied().collect())
    }

    #[test]
    fn red_components_cases() {
        // empty red, n = 4
        let d = dec_with_red(4, &[(0, 1), (1, 2), (2, 3)], &[0, 1, 2], &[]);
        let comps = d.red_components();
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|c| c.edge_count == 0));

        // red = spanning tree of n = 5
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (2, 4), (1, 3), (1, 4)];
        let d = dec_with_red(5, &edges, &[0, 1, 2, 3], &[4, 5, 6, 7]);
        assert_eq!(d.red_components().len(), 1);
        assert_eq!(d.red_components()[0].edge_count, 4);

        // red = {01, 23} on n = 5
        let edges = [(0, 1), (2, 3), (0, 2), (2, 4), (1, 3), (0, 3)];
        let d = dec_with_red(5, &edges, &[2, 3, 4, 5], &[0, 1]);
        let comps = d.red_components();
        let summary: Vec<_> = comps.iter().map(|c| (c.vertices.clone(), c.edge_count)).collect();
        assert_eq!(
            summary,
            vec![(vec![0, 1], 1), (vec![2, 3], 1), (vec![4], 0)]
        );
    }

    #[test]
    fn red_paths() {
        let edges = [(0, 1), (1, 2), (0, 2), (1, 3), (3, 2)];
        let d = dec_with_red(4, &edges, &[0, 1, 3], &[2, 4]);
        // red: 0-2, 3-2
        assert_eq!(d.red_path(0, 0).unwrap(), vec![0]);
        assert_eq!(d.red_path(0, 3).unwrap(), vec![0, 2, 3]);
        assert_eq!(d.red_path(3, 2).unwrap(), vec![3, 2]);
        assert!(d.red_path(1, 3).is_err());
        assert_eq!(d.red_forest().path_edges(0, 3).unwrap(), vec![2, 4]);
    }

    #[test]
    fn validate_reports() {
        let edges = [(0, 1), (1, 2), (0, 2), (1, 3), (3, 2)];
        let d = dec_with_red(4, &edges, &[0, 1, 3], &[2, 4]);
        assert_eq!(d.validate(), Ok(()));

        // red edge duplicated into the blue tree
        let d = dec_with_red(4, &edges, &[0, 1, 3], &[1, 2, 4]);
        assert_eq!(
            d.validate(),
            Err(Violation::NotAPartition {
                edge: 1,
                reason: PartitionFault::Duplicated
            })
        );

        // red cycle
        let edges = [(0, 1), (1, 2), (2, 3), (1, 2), (2, 1)];
        let d = dec_with_red(4, &edges, &[0, 1, 2], &[3, 4]);
        assert_eq!(d.validate(), Err(Violation::RedCycle { edges: vec![3, 4] }));
    }

    #[test]
    fn path_concatenation() {
        let g = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let t = OrientedTree::from_edges(&g, 0..4, 0).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                if let Ok(ab) = t.tree_path(a, b) {
                    let mut joined = ab.clone();
                    joined.extend(t.tree_path(b, 0).unwrap().into_iter().skip(1));
                    assert_eq!(joined, t.tree_path(a, 0).unwrap());
                }
            }
        }
    }
}
