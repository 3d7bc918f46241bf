//! Forest packing by matroid union over graphic matroids.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{Decomposition, EdgeId, MultiGraph, OrientedTree, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PackingError {
    #[error("not enough forests: vertex set {witness:?} is too dense")]
    InsufficientForests { witness: Vec<Vertex> },
    #[error("input graph is disconnected")]
    DisconnectedInput,
    #[error("k must be at least 1")]
    ZeroForests,
}

/// `k` edge-disjoint forests grown by shortest augmenting sequences.
#[derive(Clone, Debug)]
pub(crate) struct ForestUnion<'a> {
    g: &'a MultiGraph,
    color: Vec<Option<usize>>,
    adj: Vec<Vec<Vec<(Vertex, EdgeId)>>>,
}

impl<'a> ForestUnion<'a> {
    pub(crate) fn new(g: &'a MultiGraph, k: usize) -> Self {
        ForestUnion {
            g,
            color: vec![None; g.m()],
            adj: vec![vec![Vec::new(); g.n()]; k],
        }
    }

    /// Seeds forest `i` with `edges`; the caller guarantees acyclicity.
    pub(crate) fn seed(&mut self, i: usize, edges: impl IntoIterator<Item = EdgeId>) {
        for e in edges {
            self.place(e, i);
        }
    }

    fn place(&mut self, e: EdgeId, i: usize) {
        let (u, v) = self.g.endpoints(e);
        self.adj[i][u].push((v, e));
        self.adj[i][v].push((u, e));
        self.color[e] = Some(i);
    }

    fn unplace(&mut self, e: EdgeId) {
        let i = self.color[e].take().expect("edge is placed");
        let (u, v) = self.g.endpoints(e);
        self.adj[i][u].retain(|&(_, f)| f != e);
        self.adj[i][v].retain(|&(_, f)| f != e);
    }

    pub(crate) fn forests(&self) -> Vec<Vec<EdgeId>> {
        let mut out = vec![Vec::new(); self.adj.len()];
        for (e, c) in self.color.iter().enumerate() {
            if let Some(i) = c {
                out[*i].push(e);
            }
        }
        out
    }

    /// Edges on the path between `a` and `b` in forest `i`, if connected.
    fn forest_path(&self, i: usize, a: Vertex, b: Vertex) -> Option<Vec<EdgeId>> {
        let n = self.g.n();
        let mut prev: Vec<Option<(Vertex, EdgeId)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[a] = true;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            if v == b {
                let mut path = Vec::new();
                let mut cur = b;
                while let Some((p, e)) = prev[cur] {
                    path.push(e);
                    cur = p;
                }
                return Some(path);
            }
            for &(w, e) in &self.adj[i][v] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((v, e));
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Tries to add the unplaced edge `e`. On failure returns every edge
    /// reached by the search; each forest spans each component of that set.
    pub(crate) fn insert(&mut self, e: EdgeId) -> Result<usize, Vec<EdgeId>> {
        debug_assert!(self.color[e].is_none());
        let k = self.adj.len();
        // label[f] = (edge that displaces f, forest it enters)
        let mut label: Vec<Option<(EdgeId, usize)>> = vec![None; self.g.m()];
        let mut reached = vec![e];
        let mut seen = vec![false; self.g.m()];
        seen[e] = true;
        let mut queue = VecDeque::from([e]);
        while let Some(f) = queue.pop_front() {
            let (u, v) = self.g.endpoints(f);
            for i in 0..k {
                if self.color[f] == Some(i) {
                    continue;
                }
                match self.forest_path(i, u, v) {
                    None => {
                        self.apply(f, i, &label);
                        return Ok(i);
                    }
                    Some(cycle) => {
                        for c in cycle {
                            if !seen[c] {
                                seen[c] = true;
                                label[c] = Some((f, i));
                                reached.push(c);
                                queue.push_back(c);
                            }
                        }
                    }
                }
            }
        }
        Err(reached)
    }

    fn apply(&mut self, terminal: EdgeId, forest: usize, label: &[Option<(EdgeId, usize)>]) {
        let mut moves = vec![(terminal, forest)];
        let mut cur = terminal;
        while let Some((by, into)) = label[cur] {
            moves.push((by, into));
            cur = by;
        }
        for &(f, _) in &moves {
            if self.color[f].is_some() {
                self.unplace(f);
            }
        }
        for &(f, i) in &moves {
            self.place(f, i);
        }
    }
}

/// Maximum packing of `k` forests with its optimality certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestPacking {
    pub forests: Vec<Vec<EdgeId>>,
    pub leftover: Vec<EdgeId>,
    /// Disjoint vertex sets, each spanned by every forest, that together
    /// contain all leftover edges.
    pub clusters: Vec<Vec<Vertex>>,
}

impl ForestPacking {
    pub fn size(&self) -> usize {
        self.forests.iter().map(Vec::len).sum()
    }

    /// Upper bound on any `k`-forest packing: `k(|W|-1)` per cluster plus
    /// every edge not inside a cluster. Equals [`ForestPacking::size`].
    pub fn certificate_bound(&self, g: &MultiGraph) -> usize {
        let k = self.forests.len();
        let mut cluster_of = vec![usize::MAX; g.n()];
        for (i, w) in self.clusters.iter().enumerate() {
            for &v in w {
                cluster_of[v] = i;
            }
        }
        let outside = g
            .edges()
            .iter()
            .filter(|&&(u, v)| cluster_of[u] == usize::MAX || cluster_of[u] != cluster_of[v])
            .count();
        self.clusters.iter().map(|w| k * (w.len() - 1)).sum::<usize>() + outside
    }

    /// Cluster index per vertex (`None` outside all clusters).
    pub fn cluster_index(&self, n: usize) -> Vec<Option<usize>> {
        let mut idx = vec![None; n];
        for (i, w) in self.clusters.iter().enumerate() {
            for &v in w {
                idx[v] = Some(i);
            }
        }
        idx
    }
}

fn clusters_of(g: &MultiGraph, edges: &BTreeSet<EdgeId>) -> Vec<Vec<Vertex>> {
    let sub = MultiGraph::from_edges(
        g.n(),
        &edges.iter().map(|&e| g.endpoints(e)).collect::<Vec<_>>(),
    )
    .expect("subgraph of a loopless graph");
    sub.components().into_iter().filter(|c| c.len() >= 2).collect()
}

pub fn max_forest_packing(g: &MultiGraph, k: usize) -> ForestPacking {
    let mut fu = ForestUnion::new(g, k);
    let mut leftover = Vec::new();
    for e in 0..g.m() {
        if k == 0 || fu.insert(e).is_err() {
            leftover.push(e);
        }
    }
    // Re-run the searches on the final packing to collect the blocking sets.
    let mut blocked = BTreeSet::new();
    if k > 0 {
        for &e in &leftover {
            let reached = fu
                .clone()
                .insert(e)
                .expect_err("a maximum packing admits no augmentation");
            blocked.extend(reached);
        }
    } else {
        blocked.extend(leftover.iter().copied());
    }
    ForestPacking {
        forests: fu.forests(),
        leftover,
        clusters: clusters_of(g, &blocked),
    }
}

fn dense_witness(g: &MultiGraph, packing: &ForestPacking) -> Vec<Vertex> {
    let e = packing.leftover[0];
    let (u, _) = g.endpoints(e);
    packing
        .clusters
        .iter()
        .find(|w| w.contains(&u))
        .cloned()
        .expect("leftover edges lie inside clusters")
}

/// Partition into `k` forests, or a set `S` with `e(G[S]) > k(|S|-1)`.
pub fn nash_williams_decompose(g: &MultiGraph, k: usize) -> Result<Vec<Vec<EdgeId>>, PackingError> {
    if k == 0 {
        return Err(PackingError::ZeroForests);
    }
    let packing = max_forest_packing(g, k);
    if packing.leftover.is_empty() {
        Ok(packing.forests)
    } else {
        Err(PackingError::InsufficientForests {
            witness: dense_witness(g, &packing),
        })
    }
}

/// Result of asking for `k` spanning trees plus a forest.
#[derive(Clone, Debug)]
pub enum Shape {
    Ready(Decomposition),
    /// No `k` edge-disjoint spanning trees exist. `packing` is a maximum
    /// `k`-forest packing; `tight` is its cluster containing the smallest
    /// clustered vertex, if any.
    ReductionNeeded {
        packing: ForestPacking,
        tight: Option<Vec<Vertex>>,
    },
}

pub fn spanning_trees_plus_forest(
    g: &Arc<MultiGraph>,
    k: usize,
    root: Vertex,
) -> Result<Shape, PackingError> {
    if k == 0 {
        return Err(PackingError::ZeroForests);
    }
    if !g.is_connected() {
        return Err(PackingError::DisconnectedInput);
    }
    let n = g.n();
    let packing = max_forest_packing(g, k);
    if packing.size() < k * (n - 1) {
        let tight = packing.clusters.first().cloned();
        return Ok(Shape::ReductionNeeded { packing, tight });
    }
    let mut fu = ForestUnion::new(g, k + 1);
    for (i, f) in packing.forests.iter().enumerate() {
        fu.seed(i, f.iter().copied());
    }
    for &e in &packing.leftover {
        if let Err(reached) = fu.insert(e) {
            let w = clusters_of(g, &reached.into_iter().collect())
                .into_iter()
                .find(|w| w.contains(&g.endpoints(e).0))
                .expect("failed edge lies in its blocking set");
            return Err(PackingError::InsufficientForests { witness: w });
        }
    }
    let forests = fu.forests();
    let blue = forests[..k]
        .iter()
        .map(|f| OrientedTree::from_edges(g, f.iter().copied(), root))
        .collect::<Result<Vec<_>, _>>()
        .expect("full forests stay spanning trees");
    let red = forests[k].iter().copied().collect();
    Ok(Shape::Ready(Decomposition::new(g.clone(), root, blue, red)))
}
