//! Main modules against the brute-force oracles on small random inputs.

mod common;

use common::*;
use dragonforest::density::{chi, fractional_arboricity};
use dragonforest::engine::{
    classify_pair, find_minimal_special_path, minimal_legal_order, run, apply_special_path, EngineOptions,
    RunOutcome,
};
use dragonforest::oracles::{
    all_pair_cases, blue_path_starts, brute_force_forest_packing, brute_force_fractional_arboricity,
    brute_force_minimal_order_sizes, brute_force_sndt, enumerate_legal_orders,
};
use dragonforest::packing::max_forest_packing;
use dragonforest::rational::Rational;
use rand::Rng;

#[test]
fn packing_size_matches_oracle() {
    let mut r = rng(11);
    for _ in 0..300 {
        let n = r.gen_range(2..=6);
        let extra = r.gen_range(0..=12 - (n - 1));
        let g = random_connected(&mut r, n, extra);
        for k in 1..=3 {
            assert_eq!(
                max_forest_packing(&g, k).size(),
                brute_force_forest_packing(&g, k).unwrap(),
                "k = {k}, edges {:?}",
                g.edges()
            );
        }
    }
}

#[test]
fn engine_agrees_with_exhaustive_search() {
    let mut r = rng(12);
    let pairs = [(1, 1), (1, 2), (2, 1), (1, 4), (2, 3)];
    let mut solved = 0;
    for _ in 0..400 {
        let (k, d) = pairs[r.gen_range(0..pairs.len())];
        let n = r.gen_range(2..=6);
        let extra = r.gen_range(0..=n + 2);
        let g = random_connected(&mut r, n, extra);
        let Ok(oracle) = brute_force_sndt(&g, k, d) else { continue };
        let within = fractional_arboricity(&g) <= Rational::integer(k as i64) + chi(k, d).unwrap();
        match run(&g, k, d, EngineOptions::default()) {
            Ok(RunOutcome::Solved { split, .. }) => {
                split.check(&g, Some(d)).unwrap();
                assert!(oracle.is_some(), "engine solved an infeasible instance");
                solved += 1;
            }
            Ok(RunOutcome::Stuck { .. }) => assert!(!within, "stuck below the threshold: {:?}", g.edges()),
            Err(e) => assert!(!within, "{e} below the threshold"),
        }
        if within {
            assert!(oracle.is_some(), "threshold guarantee fails for {:?}", g.edges());
        }
    }
    assert!(solved > 100);
}

#[test]
fn minimal_order_is_the_lexicographic_minimum() {
    let mut r = rng(13);
    let mut checked = 0;
    for _ in 0..600 {
        let n = r.gen_range(2..=9);
        let k = r.gen_range(1..=2);
        let dec = random_decomposition(&mut r, n, k);
        let Ok(all) = enumerate_legal_orders(&dec, 0) else { continue };
        let order = minimal_legal_order(&dec, 0);
        assert_eq!(order.sizes(), brute_force_minimal_order_sizes(&dec, 0).unwrap());
        let ids: Vec<usize> = order.components.iter().map(|c| c.id).collect();
        assert!(
            all.iter().any(|o| o.iter().map(|c| c.id).collect::<Vec<_>>() == ids),
            "order {ids:?} is not legal"
        );
        checked += 1;
    }
    assert!(checked > 500);
}

#[test]
fn legal_orders_of_a_chain() {
    // red {0,1}; blue parent walk 1 -> 2 -> 3 -> 0 leaves and re-enters it
    use dragonforest::graph::{Decomposition, MultiGraph, OrientedTree};
    use std::sync::Arc;
    let g = Arc::new(MultiGraph::from_edges(4, &[(1, 2), (2, 3), (3, 0), (0, 1)]).unwrap());
    let t = OrientedTree::from_edges(&g, [0, 1, 2], 0).unwrap();
    let dec = Decomposition::new(g, 0, vec![t], [3].into_iter().collect());
    let orders = enumerate_legal_orders(&dec, 0).unwrap();
    let ids: Vec<Vec<usize>> = orders.iter().map(|o| o.iter().map(|c| c.id).collect()).collect();
    assert_eq!(ids, vec![vec![0, 2, 3]]);
}

#[test]
fn special_paths_start_as_early_as_possible() {
    let mut r = rng(14);
    let (mut found, mut applied) = (0, 0);
    for _ in 0..400 {
        let n = r.gen_range(3..=10);
        let k = r.gen_range(1..=2);
        let dec = random_decomposition(&mut r, n, k);
        let order = minimal_legal_order(&dec, 0);
        for pos in 0..order.len() {
            for c in order.children(&dec, pos) {
                let Ok(sp) = find_minimal_special_path(&dec, &order, c.edge) else { continue };
                found += 1;
                let starts = blue_path_starts(&dec, c.tail).unwrap();
                let best = starts.iter().filter_map(|&v| order.position(v)).min().unwrap();
                assert_eq!(order.position(sp.start()), Some(best));
                assert!(starts.contains(&sp.start()));
                assert_eq!(sp.tail(), c.tail);
                for w in sp.vertices.windows(2) {
                    assert!(dec.blue().iter().any(|t| t.parent(w[0]).is_some_and(|(p, _)| p == w[1])));
                }
                if let Ok(out) = apply_special_path(&dec, &order, &sp) {
                    out.validate().unwrap();
                    assert!(out.is_red(c.edge));
                    applied += 1;
                }
            }
        }
    }
    assert!(found > 200 && applied > 100, "found {found}, applied {applied}");
}

#[test]
fn pair_classification_is_witnessed() {
    let mut r = rng(15);
    let mut seen = [0usize; 3];
    for _ in 0..2000 {
        let n = r.gen_range(3..=9);
        let dec = random_decomposition(&mut r, n, 1);
        let forest = dec.red_forest();
        let t = dec.tree(0);
        let x = r.gen_range(1..n);
        let y = r.gen_range(1..n);
        if x == y || forest.component_index(x) != forest.component_index(y) {
            continue;
        }
        if t.is_descendant(y, x).unwrap() || t.is_descendant(x, y).unwrap() && r.gen_bool(0.5) {
            continue;
        }
        let witnesses = all_pair_cases(t, &forest, x, y);
        let case = classify_pair(t, &forest, x, y).unwrap();
        assert!(witnesses.contains(&case), "{case:?} not among {witnesses:?}");
        seen[case.number() as usize - 1] += 1;
    }
    assert!(seen.iter().all(|&s| s > 0), "{seen:?}");
}

#[test]
fn density_oracle_on_larger_graphs() {
    let mut r = rng(16);
    for _ in 0..100 {
        let n = r.gen_range(7..=10);
        let extra = r.gen_range(0..=3 * n);
        let g = random_connected(&mut r, n, extra);
        assert_eq!(fractional_arboricity(&g), brute_force_fractional_arboricity(&g).unwrap());
    }
}
