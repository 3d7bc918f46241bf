//! Fractional arboricity, a density witness, and a Nash-Williams split.
//!
//! Run with `cargo run --example arboricity`.

use dragonforest::density::{arboricity, densest_subgraph_witness, fractional_arboricity, subset_density};
use dragonforest::graph::MultiGraph;
use dragonforest::packing::{nash_williams_decompose, PackingError};
use dragonforest::rational::Rational;

fn wheel(spokes: usize) -> MultiGraph {
    let mut g = MultiGraph::new(spokes + 1);
    for i in 1..=spokes {
        g.add_edge(0, i).unwrap();
        g.add_edge(i, i % spokes + 1).unwrap();
    }
    g
}

fn main() {
    let g = wheel(6);
    let gamma = fractional_arboricity(&g);
    println!("wheel W6: gamma = {gamma}, arboricity = {}", arboricity(&g));

    // anything strictly below gamma has a witness, gamma itself does not
    let below = gamma - Rational::new(1, 100);
    let w = densest_subgraph_witness(&g, below).expect("gamma is the maximum density");
    println!("  witness above {below}: {w:?} with density {}", subset_density(&g, &w).unwrap());
    assert!(densest_subgraph_witness(&g, gamma).is_none());

    for k in 1..=3 {
        match nash_williams_decompose(&g, k) {
            Ok(forests) => {
                let sizes: Vec<usize> = forests.iter().map(Vec::len).collect();
                println!("  k = {k}: forests of sizes {sizes:?}");
            }
            Err(PackingError::InsufficientForests { witness }) => {
                println!("  k = {k}: impossible, {witness:?} is too dense");
            }
            Err(e) => println!("  k = {k}: {e}"),
        }
    }
}
