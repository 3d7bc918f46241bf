//! Exhaustive reference implementations for small inputs.
//!
//! Nothing here shares traversal code with the main modules.

use thiserror::Error;

use crate::engine::{case_holds, PairCase, PathEdge};
use crate::graph::{Decomposition, EdgeId, MultiGraph, OrientedTree, RedForest, Vertex};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("input too large for exhaustive search: {what} = {value} exceeds {limit}")]
pub struct TooLarge {
    pub what: &'static str,
    pub value: u128,
    pub limit: u128,
}

fn guard(what: &'static str, value: u128, limit: u128) -> Result<(), TooLarge> {
    if value > limit {
        Err(TooLarge { what, value, limit })
    } else {
        Ok(())
    }
}

/// Maximum of `e(G[S]) / (|S| - 1)` over every vertex subset with two or
/// more vertices.
pub fn brute_force_fractional_arboricity(g: &MultiGraph) -> Result<Rational, TooLarge> {
    let n = g.n();
    guard("vertices", n as u128, 16)?;
    let mut best = Rational::zero();
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as i64;
        if size < 2 {
            continue;
        }
        let inside = g
            .edges()
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .count() as i64;
        let r = Rational::new(inside, size - 1);
        if r > best {
            best = r;
        }
    }
    Ok(best)
}

/// Union-find without path compression, so unions can be undone.
struct Dsu {
    parent: Vec<usize>,
    edges: Vec<usize>,
    log: Vec<Option<(usize, usize)>>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            edges: vec![0; n],
            log: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Joins the endpoints; `false` (and nothing logged) when it closes a cycle.
    fn join(&mut self, u: usize, v: usize) -> bool {
        let (a, b) = (self.find(u), self.find(v));
        if a == b {
            return false;
        }
        self.parent[b] = a;
        let moved = self.edges[b];
        self.edges[a] += moved + 1;
        self.log.push(Some((b, moved)));
        true
    }

    fn component_edges(&self, v: usize) -> usize {
        self.edges[self.find(v)]
    }

    fn undo(&mut self) {
        if let Some(Some((b, moved))) = self.log.pop() {
            let a = self.parent[b];
            self.parent[b] = b;
            self.edges[a] -= moved + 1;
        }
    }
}

/// Edge coloring with classes `0..k` forests and class `k` a forest whose
/// components have at most `d` edges, if one exists.
pub fn brute_force_sndt(g: &MultiGraph, k: usize, d: usize) -> Result<Option<Vec<usize>>, TooLarge> {
    let space = (k as u128 + 1).checked_pow(g.m() as u32).unwrap_or(u128::MAX);
    guard("colorings", space, 10_000_000)?;
    let mut classes: Vec<Dsu> = (0..=k).map(|_| Dsu::new(g.n())).collect();
    let mut colors = vec![0; g.m()];
    fn go(
        g: &MultiGraph,
        e: usize,
        k: usize,
        d: usize,
        classes: &mut [Dsu],
        colors: &mut [usize],
    ) -> bool {
        if e == g.m() {
            return true;
        }
        let (u, v) = g.edges()[e];
        for c in 0..=k {
            if !classes[c].join(u, v) {
                continue;
            }
            if c == k && classes[c].component_edges(u) > d {
                classes[c].undo();
                continue;
            }
            colors[e] = c;
            if go(g, e + 1, k, d, classes, colors) {
                return true;
            }
            classes[c].undo();
        }
        false
    }
    Ok(go(g, 0, k, d, &mut classes, &mut colors).then_some(colors))
}

/// Largest total size of `k` edge-disjoint forests.
pub fn brute_force_forest_packing(g: &MultiGraph, k: usize) -> Result<usize, TooLarge> {
    guard("edges", g.m() as u128, 12)?;
    let mut classes: Vec<Dsu> = (0..k).map(|_| Dsu::new(g.n())).collect();
    fn go(g: &MultiGraph, e: usize, used: usize, classes: &mut [Dsu], best: &mut usize) {
        if used + (g.m() - e) <= *best {
            return;
        }
        if e == g.m() {
            *best = used;
            return;
        }
        let (u, v) = g.edges()[e];
        for c in 0..classes.len() {
            if classes[c].join(u, v) {
                go(g, e + 1, used + 1, classes, best);
                classes[c].undo();
            }
        }
        go(g, e + 1, used, classes, best);
    }
    let mut best = 0;
    go(g, 0, 0, &mut classes, &mut best);
    Ok(best)
}

/// A red component seen by the oracle: smallest vertex and edge count.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OracleComponent {
    pub id: Vertex,
    pub vertices: Vec<Vertex>,
    pub edge_count: usize,
}

/// Every legal order of the red components reachable from `r`.
pub fn enumerate_legal_orders(
    dec: &Decomposition,
    r: Vertex,
) -> Result<Vec<Vec<OracleComponent>>, TooLarge> {
    let g = dec.graph();
    let n = g.n();
    let arcs: Vec<(Vertex, Vertex)> = dec
        .blue()
        .iter()
        .flat_map(|t| (0..n).filter_map(move |v| t.parent(v).map(|(p, _)| (v, p))))
        .collect();
    let red: Vec<(Vertex, Vertex)> = dec.red().iter().map(|&e| g.endpoints(e)).collect();

    // closure of r under blue arcs and red edges, by repeated sweeps
    let mut inside = vec![false; n];
    inside[r] = true;
    loop {
        let mut grew = false;
        for &(a, b) in &arcs {
            if inside[a] && !inside[b] {
                inside[b] = true;
                grew = true;
            }
        }
        for &(a, b) in &red {
            if inside[a] != inside[b] {
                inside[a] = true;
                inside[b] = true;
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }

    // red components by label propagation
    let mut label: Vec<Vertex> = (0..n).collect();
    loop {
        let mut changed = false;
        for &(a, b) in &red {
            let m = label[a].min(label[b]);
            if label[a] != m || label[b] != m {
                label[a] = m;
                label[b] = m;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut comps: Vec<OracleComponent> = Vec::new();
    for v in (0..n).filter(|&v| inside[v]) {
        if label[v] == v {
            let vertices: Vec<Vertex> = (0..n).filter(|&w| label[w] == v).collect();
            let edge_count = red.iter().filter(|&&(a, _)| label[a] == v).count();
            comps.push(OracleComponent {
                id: v,
                vertices,
                edge_count,
            });
        }
    }
    guard("components", comps.len() as u128, 9)?;
    let idx = |v: Vertex| comps.iter().position(|c| c.id == label[v]);
    let t = comps.len();
    let mut reach = vec![vec![false; t]; t];
    for &(a, b) in &arcs {
        if let (Some(i), Some(j)) = (idx(a), idx(b)) {
            if i != j {
                reach[i][j] = true;
            }
        }
    }
    let start = idx(r).expect("root is explored");
    let mut out = Vec::new();
    let mut seq = vec![start];
    fn extend(
        seq: &mut Vec<usize>,
        t: usize,
        reach: &[Vec<bool>],
        comps: &[OracleComponent],
        out: &mut Vec<Vec<OracleComponent>>,
    ) {
        if seq.len() == t {
            out.push(seq.iter().map(|&i| comps[i].clone()).collect());
            return;
        }
        for c in 0..t {
            if seq.contains(&c) || !seq.iter().any(|&p| reach[p][c]) {
                continue;
            }
            seq.push(c);
            extend(seq, t, reach, comps, out);
            seq.pop();
        }
    }
    extend(&mut seq, t, &reach, &comps, &mut out);
    Ok(out)
}

/// Lexicographically smallest size sequence over all legal orders.
pub fn brute_force_minimal_order_sizes(dec: &Decomposition, r: Vertex) -> Result<Vec<usize>, TooLarge> {
    Ok(enumerate_legal_orders(dec, r)?
        .into_iter()
        .map(|o| o.iter().map(|c| c.edge_count).collect::<Vec<_>>())
        .min()
        .unwrap_or_default())
}

/// Start vertices of all simple blue directed paths ending at `x`.
pub fn blue_path_starts(dec: &Decomposition, x: Vertex) -> Result<Vec<Vertex>, TooLarge> {
    let n = dec.graph().n();
    guard("vertices", n as u128, 12)?;
    let mut starts = vec![false; n];
    fn back(dec: &Decomposition, v: Vertex, on: &mut Vec<bool>, starts: &mut Vec<bool>) {
        starts[v] = true;
        for t in dec.blue() {
            for u in 0..on.len() {
                if !on[u] && t.parent(u).is_some_and(|(p, _)| p == v) {
                    on[u] = true;
                    back(dec, u, on, starts);
                    on[u] = false;
                }
            }
        }
    }
    let mut on = vec![false; n];
    on[x] = true;
    back(dec, x, &mut on, &mut starts);
    Ok((0..n).filter(|&v| starts[v]).collect())
}

/// Every case witness for the pair `(x, y)` that satisfies its definition.
pub fn all_pair_cases(t: &OrientedTree, forest: &RedForest, x: Vertex, y: Vertex) -> Vec<PairCase> {
    let (Ok(p), Ok(pe)) = (forest.path(x, y), forest.path_edges(x, y)) else {
        return Vec::new();
    };
    let at = |i: usize| PathEdge {
        index: i,
        from: p[i],
        to: p[i + 1],
        edge: pe[i],
    };
    let mut out = Vec::new();
    for i in 0..pe.len() {
        out.push(PairCase::Two { edge: at(i) });
        out.push(PairCase::Three { edge: at(i) });
        for j in i + 1..pe.len() {
            out.push(PairCase::One {
                first: at(i),
                second: at(j),
            });
        }
    }
    out.retain(|c| case_holds(t, forest, x, y, c));
    out
}

/// Forest check by brute force used to validate oracle colorings.
pub fn coloring_is_valid(g: &MultiGraph, colors: &[usize], k: usize, d: usize) -> bool {
    (0..=k).all(|c| {
        let mut dsu = Dsu::new(g.n());
        let class: Vec<EdgeId> = (0..g.m()).filter(|&e| colors[e] == c).collect();
        class.iter().all(|&e| {
            let (u, v) = g.endpoints(e);
            dsu.join(u, v)
        }) && (c < k || (0..g.n()).all(|v| dsu.component_edges(v) <= d))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> MultiGraph {
        let mut g = MultiGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    #[test]
    fn arboricity_oracle() {
        let path = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(brute_force_fractional_arboricity(&path).unwrap(), Rational::integer(1));
        assert_eq!(brute_force_fractional_arboricity(&complete(4)).unwrap(), Rational::integer(2));
        let mut k5e = complete(5);
        k5e = MultiGraph::from_edges(5, &k5e.edges()[1..]).unwrap();
        assert_eq!(brute_force_fractional_arboricity(&k5e).unwrap(), Rational::new(9, 4));
        assert!(brute_force_fractional_arboricity(&MultiGraph::new(17)).is_err());
    }

    #[test]
    fn sndt_oracle() {
        let path = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(brute_force_sndt(&path, 1, 1).unwrap().is_some());
        assert_eq!(brute_force_sndt(&complete(4), 1, 1).unwrap(), None);
        let c = brute_force_sndt(&complete(4), 2, 1).unwrap().unwrap();
        assert!(coloring_is_valid(&complete(4), &c, 2, 1));
    }

    #[test]
    fn packing_oracle() {
        assert_eq!(brute_force_forest_packing(&complete(4), 2).unwrap(), 6);
        let c5 = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(brute_force_forest_packing(&c5, 1).unwrap(), 4);
        let one = MultiGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(brute_force_forest_packing(&one, 3).unwrap(), 1);
    }
}
