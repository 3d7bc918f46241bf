//! Exploration subgraph, legal orders and the engine potential.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::graph::{Decomposition, EdgeId, RedComponent, RedForest, Vertex};

/// Vertices reachable from the root along blue out-edges and red edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exploration {
    pub root: Vertex,
    pub contains: Vec<bool>,
    /// Members in discovery order.
    pub vertices: Vec<Vertex>,
    pub red_edges: Vec<EdgeId>,
    /// `(tree, edge)` for every blue edge with both ends inside.
    pub blue_edges: Vec<(usize, EdgeId)>,
}

impl Exploration {
    pub fn red_density(&self) -> Option<crate::rational::Rational> {
        (self.vertices.len() >= 2).then(|| {
            crate::rational::Rational::new(
                self.red_edges.len() as i64,
                self.vertices.len() as i64 - 1,
            )
        })
    }
}

pub fn exploration_subgraph(dec: &Decomposition, r: Vertex) -> Exploration {
    exploration_with(dec, &dec.red_forest(), r)
}

pub(crate) fn exploration_with(dec: &Decomposition, forest: &RedForest, r: Vertex) -> Exploration {
    let n = dec.graph().n();
    let mut contains = vec![false; n];
    contains[r] = true;
    let mut vertices = vec![r];
    let mut queue = VecDeque::from([r]);
    while let Some(v) = queue.pop_front() {
        let blue = dec.blue().iter().filter_map(|t| t.parent(v).map(|(p, _)| p));
        let red = forest.neighbors(v).iter().map(|&(w, _)| w);
        for w in blue.chain(red) {
            if !contains[w] {
                contains[w] = true;
                vertices.push(w);
                queue.push_back(w);
            }
        }
    }
    let red_edges = dec
        .red()
        .iter()
        .copied()
        .filter(|&e| {
            let (u, v) = dec.graph().endpoints(e);
            contains[u] && contains[v]
        })
        .collect();
    let mut blue_edges = Vec::new();
    for (i, t) in dec.blue().iter().enumerate() {
        for &v in &vertices {
            if let Some((p, e)) = t.parent(v) {
                if contains[p] {
                    blue_edges.push((i, e));
                }
            }
        }
    }
    Exploration {
        root: r,
        contains,
        vertices,
        red_edges,
        blue_edges,
    }
}

/// A blue edge from an earlier component into a later one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChildEdge {
    /// Position of the child component in the order.
    pub child: usize,
    pub tail: Vertex,
    pub head: Vertex,
    pub edge: EdgeId,
    pub tree: usize,
}

/// Ordering of the red components of the exploration subgraph in which each
/// component after the first is entered by a blue edge from an earlier one.
#[derive(Clone, Debug)]
pub struct LegalOrder {
    pub root: Vertex,
    pub components: Vec<RedComponent>,
    /// Generating edge of each position (`None` for the first).
    pub generating: Vec<Option<ChildEdge>>,
    position: Vec<Option<usize>>,
    aux_parent: Vec<Option<(Vertex, EdgeId)>>,
}

impl LegalOrder {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.edge_count).collect()
    }

    /// 0-based position of the component containing `v`, if `v` is explored.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.position[v]
    }

    /// Whether `w` lies in a strictly later component than `v`.
    pub fn is_later(&self, v: Vertex, w: Vertex) -> bool {
        matches!((self.position[v], self.position[w]), (Some(a), Some(b)) if b > a)
    }

    /// Parent of `v` in the auxiliary tree (red edges plus generating edges,
    /// rooted at the root).
    pub fn aux_parent(&self, v: Vertex) -> Option<(Vertex, EdgeId)> {
        self.aux_parent[v]
    }

    /// True when `a` is a (reflexive) ancestor of `b` in the auxiliary tree.
    pub fn aux_is_ancestor(&self, a: Vertex, mut b: Vertex) -> bool {
        loop {
            if a == b {
                return true;
            }
            match self.aux_parent[b] {
                Some((p, _)) => b = p,
                None => return false,
            }
        }
    }

    /// All blue edges leaving the component at position `pos` towards a later
    /// position, ordered by `(child, tree, edge)`.
    pub fn children(&self, dec: &Decomposition, pos: usize) -> Vec<ChildEdge> {
        let mut out = Vec::new();
        for &v in &self.components[pos].vertices {
            for (i, t) in dec.blue().iter().enumerate() {
                if let Some((p, e)) = t.parent(v) {
                    if let Some(cp) = self.position[p] {
                        if cp > pos {
                            out.push(ChildEdge {
                                child: cp,
                                tail: v,
                                head: p,
                                edge: e,
                                tree: i,
                            });
                        }
                    }
                }
            }
        }
        out.sort_by_key(|c| (c.child, c.tree, c.edge));
        out
    }
}

/// Exact lexicographic minimum over legal orders.
pub fn minimal_legal_order(dec: &Decomposition, r: Vertex) -> LegalOrder {
    let forest = dec.red_forest();
    let expl = exploration_with(dec, &forest, r);
    minimal_order_with(dec, &forest, &expl)
}

pub(crate) fn minimal_order_with(
    dec: &Decomposition,
    forest: &RedForest,
    expl: &Exploration,
) -> LegalOrder {
    let n = dec.graph().n();
    let r = expl.root;
    // local ids for the explored components, sorted by component id
    let mut global: Vec<usize> = expl
        .vertices
        .iter()
        .map(|&v| forest.component_index(v))
        .collect();
    global.sort_unstable();
    global.dedup();
    let local: HashMap<usize, usize> = global.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let t = global.len();
    let sizes: Vec<usize> = global
        .iter()
        .map(|&g| forest.components()[g].edge_count)
        .collect();
    let mut succ = vec![Vec::new(); t];
    for &v in &expl.vertices {
        let a = local[&forest.component_index(v)];
        for tree in dec.blue() {
            if let Some((p, _)) = tree.parent(v) {
                let b = local[&forest.component_index(p)];
                if a != b {
                    succ[a].push(b);
                }
            }
        }
    }
    for s in &mut succ {
        s.sort_unstable();
        s.dedup();
    }
    let start = local[&forest.component_index(r)];
    let order = LexSearch::new(&sizes, &succ).run(start);

    let mut position = vec![None; n];
    let mut pos_of_local = vec![usize::MAX; t];
    let components: Vec<RedComponent> = order
        .iter()
        .enumerate()
        .map(|(p, &c)| {
            pos_of_local[c] = p;
            let comp = forest.components()[global[c]].clone();
            for &v in &comp.vertices {
                position[v] = Some(p);
            }
            comp
        })
        .collect();

    let mut generating: Vec<Option<ChildEdge>> = vec![None; components.len()];
    for &v in &expl.vertices {
        let pv = position[v].expect("explored vertex has a position");
        for (i, tree) in dec.blue().iter().enumerate() {
            if let Some((p, e)) = tree.parent(v) {
                let pp = position[p].expect("explored");
                if pp > pv {
                    let cand = ChildEdge {
                        child: pp,
                        tail: v,
                        head: p,
                        edge: e,
                        tree: i,
                    };
                    let slot = &mut generating[pp];
                    if slot.is_none_or(|g| e < g.edge) {
                        *slot = Some(cand);
                    }
                }
            }
        }
    }

    // auxiliary tree: red edges plus generating edges, rooted at r
    let mut aux_parent = vec![None; n];
    let mut seen = vec![false; n];
    seen[r] = true;
    let mut queue = VecDeque::from([r]);
    let mut entered_by: Vec<Vec<ChildEdge>> = vec![Vec::new(); n];
    for g in generating.iter().flatten() {
        entered_by[g.tail].push(*g);
    }
    while let Some(v) = queue.pop_front() {
        let red = forest.neighbors(v).iter().copied();
        let gen = entered_by[v].iter().map(|g| (g.head, g.edge));
        for (w, e) in red.chain(gen) {
            if !seen[w] {
                seen[w] = true;
                aux_parent[w] = Some((v, e));
                queue.push_back(w);
            }
        }
    }
    debug_assert!(expl.vertices.iter().all(|&v| seen[v]));

    LegalOrder {
        root: r,
        components,
        generating,
        position,
        aux_parent,
    }
}

/// Lexicographic minimum over component sequences in which every component
/// after the first has a predecessor placed earlier.
struct LexSearch<'a> {
    sizes: &'a [usize],
    succ: &'a [Vec<usize>],
    memo: HashMap<Vec<u64>, Vec<usize>>,
}

impl<'a> LexSearch<'a> {
    fn new(sizes: &'a [usize], succ: &'a [Vec<usize>]) -> Self {
        LexSearch {
            sizes,
            succ,
            memo: HashMap::new(),
        }
    }

    fn run(mut self, start: usize) -> Vec<usize> {
        let t = self.sizes.len();
        let mut placed = vec![0u64; t.div_ceil(64)];
        let mut avail = vec![false; t];
        let mut order = vec![start];
        self.place(&mut placed, &mut avail, start);
        order.extend(self.best(placed, avail));
        order
    }

    fn place(&self, placed: &mut [u64], avail: &mut [bool], c: usize) {
        placed[c / 64] |= 1 << (c % 64);
        avail[c] = false;
        for &s in &self.succ[c] {
            if placed[s / 64] & (1 << (s % 64)) == 0 {
                avail[s] = true;
            }
        }
    }

    fn best(&mut self, mut placed: Vec<u64>, mut avail: Vec<bool>) -> Vec<usize> {
        let mut prefix = Vec::new();
        loop {
            let Some(m) = (0..avail.len())
                .filter(|&c| avail[c])
                .map(|c| self.sizes[c])
                .min()
            else {
                return prefix;
            };
            let cands: Vec<usize> = (0..avail.len())
                .filter(|&c| avail[c] && self.sizes[c] == m)
                .collect();
            if m == 0 || cands.len() == 1 {
                // ties at size zero never change the value sequence
                self.place(&mut placed, &mut avail, cands[0]);
                prefix.push(cands[0]);
                continue;
            }
            if let Some(rest) = self.memo.get(&placed) {
                prefix.extend_from_slice(rest);
                return prefix;
            }
            let key = placed.clone();
            let mut unlock_seen: Vec<Vec<usize>> = Vec::new();
            let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
            for &c in &cands {
                let unlock: Vec<usize> = self.succ[c]
                    .iter()
                    .copied()
                    .filter(|&s| !avail[s] && placed[s / 64] & (1 << (s % 64)) == 0)
                    .collect();
                if unlock_seen.contains(&unlock) {
                    continue;
                }
                unlock_seen.push(unlock);
                let (mut p2, mut a2) = (placed.clone(), avail.clone());
                self.place(&mut p2, &mut a2, c);
                let mut seq = vec![c];
                seq.extend(self.best(p2, a2));
                let vals: Vec<usize> = seq.iter().map(|&x| self.sizes[x]).collect();
                if best.as_ref().is_none_or(|(bv, _)| vals < *bv) {
                    best = Some((vals, seq));
                }
            }
            let (_, seq) = best.expect("at least one candidate");
            self.memo.insert(key, seq.clone());
            prefix.extend(seq);
            return prefix;
        }
    }
}

/// Residue vector and legal-order sizes, compared lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Potential {
    /// Sizes of red components with more than `d` edges, descending.
    pub rho: Vec<usize>,
    /// Sizes of the minimal legal order, trailing zeros removed.
    pub sigma: Vec<usize>,
}

impl Potential {
    pub fn new(rho: Vec<usize>, mut sigma: Vec<usize>) -> Self {
        while sigma.last() == Some(&0) {
            sigma.pop();
        }
        Potential { rho, sigma }
    }

    /// `rho_i` for `i = n-1` down to `d+1`.
    pub fn residue_counts(&self, n: usize, d: usize) -> Vec<usize> {
        (d + 1..n.max(d + 1))
            .rev()
            .map(|i| self.rho.iter().filter(|&&s| s == i).count())
            .collect()
    }
}

impl Ord for Potential {
    fn cmp(&self, other: &Self) -> Ordering {
        // a sorted-descending size list compares like the residue vector
        self.rho
            .cmp(&other.rho)
            .then_with(|| self.sigma.cmp(&other.sigma))
    }
}

impl PartialOrd for Potential {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rho={:?} sigma={:?}", self.rho, self.sigma)
    }
}

pub fn residue(forest: &RedForest, d: usize) -> Vec<usize> {
    let mut big: Vec<usize> = forest
        .components()
        .iter()
        .map(|c| c.edge_count)
        .filter(|&s| s > d)
        .collect();
    big.sort_unstable_by(|a, b| b.cmp(a));
    big
}

pub fn potential(dec: &Decomposition, r: Vertex, d: usize) -> Potential {
    let forest = dec.red_forest();
    let expl = exploration_with(dec, &forest, r);
    let order = minimal_order_with(dec, &forest, &expl);
    Potential::new(residue(&forest, d), order.sizes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{MultiGraph, OrientedTree};
    use std::sync::Arc;

    /// Blue star towards 0 plus the given extra red edges.
    fn star_dec(n: usize, red: &[(usize, usize)]) -> Decomposition {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v, 0)).collect();
        edges.extend_from_slice(red);
        let g = Arc::new(MultiGraph::from_edges(n, &edges).unwrap());
        let t = OrientedTree::from_edges(&g, 0..n - 1, 0).unwrap();
        Decomposition::new(g, 0, vec![t], (n - 1..edges.len()).collect())
    }

    #[test]
    fn empty_red_explores_only_root() {
        let d = star_dec(4, &[]);
        let h = exploration_subgraph(&d, 0);
        assert_eq!(h.vertices, vec![0]);
        let h = exploration_subgraph(&d, 2);
        assert_eq!(h.vertices, vec![2, 0]);
    }

    #[test]
    fn red_component_explored_whole() {
        let d = star_dec(4, &[(1, 2), (2, 3)]);
        let h = exploration_subgraph(&d, 1);
        let mut v = h.vertices.clone();
        v.sort();
        assert_eq!(v, vec![0, 1, 2, 3]);
        assert_eq!(h.red_edges.len(), 2);
    }

    #[test]
    fn greedy_prefers_small_children() {
        // R* = {1,2,3} (two red edges); children {0} via blue, {4,5} via blue
        let g = Arc::new(
            MultiGraph::from_edges(
                6,
                &[(1, 0), (2, 0), (3, 4), (4, 0), (5, 0), (1, 2), (2, 3), (4, 5)],
            )
            .unwrap(),
        );
        let t = OrientedTree::from_edges(&g, 0..5, 0).unwrap();
        let d = Decomposition::new(g, 0, vec![t], [5, 6, 7].into_iter().collect()).reroot(2);
        d.validate().unwrap();
        let o = minimal_legal_order(&d, 2);
        assert_eq!(o.sizes(), vec![2, 0, 1]);
    }

    #[test]
    fn ties_resolved_by_lookahead() {
        // placed R*; A and B both size 2; only A unlocks a size-0 component.
        let sizes = [3, 2, 2, 0];
        let succ = vec![vec![1, 2], vec![3], vec![], vec![]];
        let order = LexSearch::new(&sizes, &succ).run(0);
        let vals: Vec<_> = order.iter().map(|&c| sizes[c]).collect();
        assert_eq!(vals, vec![3, 2, 0, 2]);
        // B listed first must still lose
        let sizes = [3, 2, 2, 0];
        let succ = vec![vec![1, 2], vec![], vec![3], vec![]];
        let order = LexSearch::new(&sizes, &succ).run(0);
        assert_eq!(order, vec![0, 2, 3, 1]);
    }

    #[test]
    fn potential_ordering() {
        let a = Potential::new(vec![5], vec![5, 0, 2]);
        let b = Potential::new(vec![5], vec![5, 1]);
        assert!(a < b);
        assert_eq!(Potential::new(vec![], vec![3, 0]), Potential::new(vec![], vec![3]));
        assert!(Potential::new(vec![6], vec![]) > Potential::new(vec![5, 5], vec![9]));
        assert!(Potential::new(vec![5], vec![]) < Potential::new(vec![5, 4], vec![]));
        assert_eq!(a.residue_counts(8, 3), vec![0, 0, 1, 0]);
    }
}
