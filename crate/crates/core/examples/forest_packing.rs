//! Maximum packings of forests and the spanning-tree shape the engine starts from.

use std::sync::Arc;

use dragonforest::graph::MultiGraph;
use dragonforest::packing::{max_forest_packing, spanning_trees_plus_forest, Shape};

fn two_k5_and_a_bridge() -> MultiGraph {
    let mut g = MultiGraph::new(10);
    for base in [0, 5] {
        for u in 0..5 {
            for v in u + 1..5 {
                g.add_edge(base + u, base + v).unwrap();
            }
        }
    }
    g.add_edge(4, 5).unwrap();
    g
}

fn main() {
    let g = Arc::new(two_k5_and_a_bridge());
    for k in [1, 2, 3] {
        let p = max_forest_packing(&g, k);
        println!(
            "k = {k}: packed {} of {} edges (upper bound {}), clusters {:?}",
            p.size(),
            g.m(),
            p.certificate_bound(&g),
            p.clusters
        );
    }

    // The bridge rules out two disjoint spanning trees, so the engine has
    // to work cluster by cluster.
    match spanning_trees_plus_forest(&g, 2, 0).unwrap() {
        Shape::Ready(_) => println!("two spanning trees found"),
        Shape::ReductionNeeded { tight, .. } => println!("needs reduction; tight set {tight:?}"),
    }
    let k5 = Arc::new(MultiGraph::from_edges(5, &g.edges()[..10]).unwrap());
    if let Shape::Ready(dec) = spanning_trees_plus_forest(&k5, 2, 0).unwrap() {
        println!("K5: red forest {:?}, largest red component {}", dec.red(), dec.max_red_component_edges());
    }
}
