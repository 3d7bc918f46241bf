//! Fractional arboricity and the threshold algebra of the decomposition bounds.

use thiserror::Error;

use crate::flow::{FlowNetwork, INF};
use crate::graph::{MultiGraph, Vertex};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("parameters out of range: k = {k}, d = {d}")]
pub struct ParameterOutOfRange {
    pub k: usize,
    pub d: usize,
}

/// Density threshold above `k` that still guarantees a decomposition with
/// red components of at most `d` edges.
///
/// `d/(d+k+1)` for `d <= k+1`, `(d+k)/(d+3k+1)` for `k+1 < d < 3(k+1)`.
pub fn chi(k: usize, d: usize) -> Result<Rational, ParameterOutOfRange> {
    if k < 1 || d < 1 || d >= 3 * (k + 1) {
        return Err(ParameterOutOfRange { k, d });
    }
    let (k, d) = (k as i64, d as i64);
    Ok(if d <= k + 1 {
        Rational::new(d, d + k + 1)
    } else {
        Rational::new(d + k, d + 3 * k + 1)
    })
}

/// Largest red component size guaranteed for user parameters `(k, d)`,
/// `1 <= d <= 2(k+1)`.
pub fn component_bound(k: usize, d: usize) -> Result<usize, ParameterOutOfRange> {
    if k < 1 || d < 1 || d > 2 * (k + 1) {
        return Err(ParameterOutOfRange { k, d });
    }
    Ok(if d <= k + 1 {
        d
    } else {
        d + (k * d).div_ceil(k + 1) - k
    })
}

/// Whether a red component with `edge_count` edges counts as small.
pub fn is_small(edge_count: usize, k: usize, d: usize) -> bool {
    if d <= k + 1 {
        edge_count == 0
    } else {
        d < 3 * (k + 1) && edge_count <= 1
    }
}

/// `e(G[S]) / (|S| - 1)`, or `None` for fewer than two vertices.
pub fn subset_density(g: &MultiGraph, vertices: &[Vertex]) -> Option<Rational> {
    if vertices.len() < 2 {
        return None;
    }
    let mut mask = vec![false; g.n()];
    for &v in vertices {
        mask[v] = true;
    }
    Some(Rational::new(
        g.edges_within(&mask) as i64,
        vertices.len() as i64 - 1,
    ))
}

/// A vertex set `S` with `e(G[S]) > t(|S|-1)`, if one exists.
///
/// For each vertex `v` one min cut maximizes `q·e(H) - p·v(H)` over sets
/// `H ∋ v` (with `t = p/q`); a witness exists iff some maximum exceeds `-p`.
pub fn densest_subgraph_witness(g: &MultiGraph, threshold: Rational) -> Option<Vec<Vertex>> {
    assert!(threshold > Rational::zero(), "threshold must be positive");
    let (p, q) = (threshold.numer(), threshold.denom());
    let (n, m) = (g.n(), g.m());
    if m == 0 {
        return None;
    }
    let (src, sink) = (0, 1);
    let vnode = |v: Vertex| 2 + v;
    let enode = |e: usize| 2 + n + e;

    let mut base = FlowNetwork::new(2 + n + m);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        base.add_arc(src, enode(e), q);
        base.add_arc(enode(e), vnode(u), INF);
        base.add_arc(enode(e), vnode(v), INF);
    }
    for v in 0..n {
        base.add_arc(vnode(v), sink, p);
    }

    for v in 0..n {
        if g.degree(v) == 0 {
            continue;
        }
        let mut net = base.clone();
        net.add_arc(src, vnode(v), INF);
        let cut = net.max_flow(src, sink);
        let best = q * m as i64 - cut;
        if best > -p {
            let side = net.source_side(src);
            let set: Vec<Vertex> = (0..n).filter(|&w| side[vnode(w)]).collect();
            debug_assert!(subset_density(g, &set).is_some_and(|r| r > threshold));
            return Some(set);
        }
    }
    None
}

/// Exact `max e(H)/(v(H)-1)` over subgraphs with at least two vertices;
/// zero for edgeless graphs.
pub fn fractional_arboricity(g: &MultiGraph) -> Rational {
    if g.m() == 0 {
        return Rational::zero();
    }
    let exceeds = |t: Rational| densest_subgraph_witness(g, t).is_some();

    // smallest integer c with γ <= c
    let (mut lo_int, mut hi_int) = (0usize, g.m());
    while hi_int - lo_int > 1 {
        let mid = (lo_int + hi_int) / 2;
        if exceeds(Rational::integer(mid as i64)) {
            lo_int = mid;
        } else {
            hi_int = mid;
        }
    }
    // γ lies in (lo, hi]; lo and hi stay Farey neighbours throughout.
    let mut lo = Rational::integer(lo_int as i64);
    let mut hi = Rational::integer(hi_int as i64);
    let max_denom = (g.n() - 1) as i64;
    loop {
        let med = lo.mediant(&hi);
        if med.denom() > max_denom {
            return hi;
        }
        if exceeds(med) {
            lo = med;
        } else {
            hi = med;
        }
    }
}

/// Arboricity, the least number of forests covering the edges.
pub fn arboricity(g: &MultiGraph) -> usize {
    fractional_arboricity(g).ceil() as usize
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
    fn chi_values() {
        assert_eq!(chi(1, 1).unwrap(), Rational::new(1, 3));
        assert_eq!(chi(1, 5).unwrap(), Rational::new(2, 3));
        assert_eq!(chi(2, 4).unwrap(), Rational::new(6, 11));
        assert!(chi(1, 6).is_err());
        assert!(chi(0, 1).is_err());
    }

    #[test]
    fn bound_values() {
        assert_eq!(component_bound(1, 4).unwrap(), 5);
        assert_eq!(component_bound(2, 3).unwrap(), 3);
        assert_eq!(component_bound(2, 5).unwrap(), 7);
        assert!(component_bound(1, 5).is_err());
    }

    #[test]
    fn small_predicate() {
        assert!(is_small(0, 1, 1));
        assert!(is_small(1, 1, 4));
        assert!(!is_small(1, 2, 3));
    }

    #[test]
    fn small_iff_density_below_chi() {
        for k in 1..6 {
            for d in 1..3 * (k + 1) {
                let c = chi(k, d).unwrap();
                for e in 0..10 {
                    let below = Rational::new(e as i64, e as i64 + 1) < c;
                    assert_eq!(is_small(e, k, d), below, "e={e} k={k} d={d}");
                }
            }
        }
    }

    #[test]
    fn arboricity_basics() {
        let path = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(fractional_arboricity(&path), Rational::integer(1));
        assert_eq!(fractional_arboricity(&complete(4)), Rational::integer(2));
        assert_eq!(fractional_arboricity(&complete(5)), Rational::new(5, 2));
        assert_eq!(fractional_arboricity(&MultiGraph::new(3)), Rational::zero());
        let triple = MultiGraph::from_edges(3, &[(0, 1), (0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(fractional_arboricity(&triple), Rational::integer(3));
    }

    #[test]
    fn witnesses() {
        let path = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(densest_subgraph_witness(&path, Rational::integer(1)).is_none());
        let k4 = complete(4);
        let s = densest_subgraph_witness(&k4, Rational::new(3, 2)).unwrap();
        assert!(subset_density(&k4, &s).unwrap() > Rational::new(3, 2));
    }
}
