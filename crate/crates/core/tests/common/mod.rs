//! Graph generators shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use dragonforest::density::fractional_arboricity;
use dragonforest::engine::perform_exchange;
use dragonforest::graph::{Decomposition, MultiGraph, OrientedTree};
use dragonforest::packing::{spanning_trees_plus_forest, Shape};
use dragonforest::rational::Rational;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complete(n: usize) -> MultiGraph {
    let mut g = MultiGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub fn petersen() -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    MultiGraph::from_edges(10, &edges).unwrap()
}

/// A random spanning tree on `n` vertices plus `extra` random edges,
/// parallel edges allowed.
pub fn random_connected(rng: &mut TestRng, n: usize, extra: usize) -> MultiGraph {
    let mut g = MultiGraph::new(n);
    for v in 1..n {
        let p = rng.gen_range(0..v);
        g.add_edge(p, v).unwrap();
    }
    if n >= 2 {
        for _ in 0..extra {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Adds random edges to a random tree while the fractional arboricity stays
/// at most `limit`, stopping after `patience` rejections in a row.
pub fn saturated(rng: &mut TestRng, n: usize, limit: Rational, patience: usize) -> MultiGraph {
    let mut g = random_connected(rng, n, 0);
    let mut misses = 0;
    while misses < patience && n >= 2 {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let mut h = g.clone();
        h.add_edge(u, v).unwrap();
        if fractional_arboricity(&h) <= limit {
            g = h;
            misses = 0;
        } else {
            misses += 1;
        }
    }
    g
}

/// The engine's starting decomposition, pushed around by random valid
/// exchanges. `None` when `g` lacks `k` disjoint spanning trees.
pub fn scrambled(rng: &mut TestRng, g: &MultiGraph, k: usize, rounds: usize) -> Option<Decomposition> {
    let Shape::Ready(mut dec) = spanning_trees_plus_forest(&Arc::new(g.clone()), k, 0).ok()? else {
        return None;
    };
    for _ in 0..rounds {
        let red: Vec<_> = dec.red().iter().copied().collect();
        let Some(&e) = red.choose(rng) else { break };
        let u = rng.gen_range(0..g.n());
        if let Ok(next) = perform_exchange(&dec, rng.gen_range(0..k), u, e) {
            dec = next;
        }
    }
    Some(dec)
}

/// `k` random spanning trees and a random forest on `n` vertices, as a
/// decomposition of their union rooted at 0.
pub fn random_decomposition(rng: &mut TestRng, n: usize, k: usize) -> Decomposition {
    let mut edges = Vec::new();
    let mut classes = Vec::new();
    for _ in 0..k {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut class = Vec::new();
        for i in 1..n {
            class.push(edges.len());
            edges.push((order[rng.gen_range(0..i)], order[i]));
        }
        classes.push(class);
    }
    let mut red = Vec::new();
    let mut label: Vec<usize> = (0..n).collect();
    for _ in 0..n {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if label[u] != label[v] {
            let (a, b) = (label[u], label[v]);
            label.iter_mut().filter(|l| **l == b).for_each(|l| *l = a);
            red.push(edges.len());
            edges.push((u, v));
        }
    }
    let g = Arc::new(MultiGraph::from_edges(n, &edges).unwrap());
    let blue = classes
        .into_iter()
        .map(|c| OrientedTree::from_edges(&g, c, 0).unwrap())
        .collect();
    Decomposition::new(g, 0, blue, red.into_iter().collect())
}
