//! The reconfiguration engine end to end.
//!
//! Decomposes the Petersen graph into one spanning tree plus a forest with
//! components of at most five edges, starting from a deliberately poor
//! decomposition so that the engine has to move. Set `DRAGONFOREST_TRACE=1`
//! to watch each accepted move.

use std::sync::Arc;

use dragonforest::engine::{perform_exchange, run, solve_decomposition, EngineOptions, Outcome, RunOutcome};
use dragonforest::graph::MultiGraph;
use dragonforest::packing::{spanning_trees_plus_forest, Shape};

fn petersen() -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    MultiGraph::from_edges(10, &edges).unwrap()
}

fn main() {
    let opts = EngineOptions::from_env();
    let g = Arc::new(petersen());

    let out = run(&g, 1, 5, opts).expect("parameters are in range");
    let split = out.split().expect("Petersen meets the density bound");
    println!(
        "run: {} moves, red forest {:?}, largest red component {}",
        out.moves().len(),
        split.red,
        split.max_red_component_edges(&g)
    );

    // Grow the red forest by exchanging tree edges into it, then tighten
    // the bound to three and let the engine repair it.
    let Shape::Ready(mut dec) = spanning_trees_plus_forest(&g, 1, 0).unwrap() else {
        unreachable!("Petersen is connected");
    };
    for (u, e) in (1..10).flat_map(|u| (0..15).map(move |e| (u, e))) {
        if let Ok(next) = perform_exchange(&dec, 0, u, e) {
            if next.max_red_component_edges() > dec.max_red_component_edges() {
                dec = next;
            }
        }
    }
    println!("scrambled: largest red component {}", dec.max_red_component_edges());
    match solve_decomposition(dec, 1, 3, opts).unwrap() {
        Outcome::Solved { decomposition, moves } => {
            for m in &moves {
                println!("  {m}");
            }
            println!("solved: largest red component {}", decomposition.max_red_component_edges());
        }
        Outcome::Stuck { certificate, .. } => {
            println!("stuck: exploration density {}", certificate.density);
        }
    }

    if let RunOutcome::Stuck { certificate, .. } = run(&g, 1, 1, opts).unwrap() {
        println!(
            "bound 1 is too strict: density {} > threshold {}",
            certificate.density, certificate.threshold
        );
    }
}
