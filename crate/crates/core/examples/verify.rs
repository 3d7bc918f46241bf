//! Independent checking: the decomposition validator and the brute-force oracles.

use dragonforest::cli::{sndt, verify_decomposition, DecompositionJson};
use dragonforest::density::fractional_arboricity;
use dragonforest::engine::EngineOptions;
use dragonforest::graph::MultiGraph;
use dragonforest::oracles::{brute_force_fractional_arboricity, brute_force_sndt, coloring_is_valid};

fn main() {
    let g = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3), (0, 1)]).unwrap();
    println!(
        "gamma: flow {} / brute force {}",
        fractional_arboricity(&g),
        brute_force_fractional_arboricity(&g).unwrap()
    );

    let report = sndt(&g, 2, 1, EngineOptions::default());
    println!("sndt exit {}: {}", report.code, report.stdout.trim());
    let mut dec: DecompositionJson = serde_json::from_str(&report.stdout).unwrap();
    println!("verify: {:?}", verify_decomposition(&g, &dec));

    dec.max_red_component_edges += 1;
    println!("tampered claim: {}", verify_decomposition(&g, &dec).unwrap_err());

    let coloring = brute_force_sndt(&g, 2, 1).unwrap().expect("a solution exists");
    println!("oracle coloring {coloring:?}, valid: {}", coloring_is_valid(&g, &coloring, 2, 1));
}
