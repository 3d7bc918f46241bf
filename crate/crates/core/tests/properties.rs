//! Property tests over randomly generated graphs and decompositions.

mod common;

use common::*;
use dragonforest::density::{chi, fractional_arboricity};
use dragonforest::engine::{perform_exchange, run, EngineOptions, Potential, RunOutcome};
use dragonforest::format::{parse_graph, write_graph};
use dragonforest::graph::{find_cycle, MultiGraph};
use dragonforest::planar::{edge_connectivity, verify_thinness, CutMode};
use dragonforest::rational::Rational;
use proptest::prelude::*;

/// Exchange condition checked from the definition: the tree stays a
/// spanning tree and the red side stays a forest.
fn exchange_allowed(dec: &dragonforest::graph::Decomposition, tree: usize, u: usize, e: usize) -> bool {
    let g = dec.graph();
    let Some((_, up)) = dec.tree(tree).parent(u) else { return false };
    let blue: Vec<usize> = dec.blue_edges(tree).into_iter().filter(|&b| b != up).chain([e]).collect();
    let red: Vec<usize> = dec.red().iter().copied().filter(|&r| r != e).chain([up]).collect();
    blue.len() + 1 == g.n() && find_cycle(g, blue).is_none() && find_cycle(g, red).is_none()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exchange_matches_definition(seed in any::<u64>(), n in 2usize..10, k in 1usize..3) {
        let mut r = rng(seed);
        let dec = random_decomposition(&mut r, n, k);
        for tree in 0..k {
            for u in 1..n {
                for &e in dec.red() {
                    let out = perform_exchange(&dec, tree, u, e);
                    prop_assert_eq!(out.is_ok(), exchange_allowed(&dec, tree, u, e));
                    if let Ok(out) = out {
                        prop_assert_eq!(out.validate(), Ok(()));
                        prop_assert!(out.is_red(dec.tree(tree).parent(u).unwrap().1));
                    }
                }
            }
        }
    }

    #[test]
    fn reroot_keeps_the_partition(seed in any::<u64>(), n in 2usize..10, k in 1usize..3) {
        let mut r = rng(seed);
        let dec = random_decomposition(&mut r, n, k);
        let moved = dec.reroot(n - 1);
        prop_assert_eq!(moved.validate(), Ok(()));
        prop_assert_eq!(moved.red(), dec.red());
        for i in 0..k {
            let (mut a, mut b) = (dec.blue_edges(i), moved.blue_edges(i));
            a.sort_unstable();
            b.sort_unstable();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn engine_potential_strictly_drops(seed in any::<u64>(), n in 3usize..10, pair in 0usize..4) {
        let (k, d) = [(1, 1), (1, 2), (2, 2), (1, 4)][pair];
        let mut r = rng(seed);
        let limit = Rational::integer(k as i64) + chi(k, d).unwrap();
        let g = saturated(&mut r, n, limit, 8);
        let out = run(&g, k, d, EngineOptions::default()).unwrap();
        for m in out.moves() {
            prop_assert!(m.after < m.before, "{}", m);
        }
        match out {
            RunOutcome::Solved { split, .. } => prop_assert_eq!(split.check(&g, Some(d)), Ok(())),
            RunOutcome::Stuck { .. } => prop_assert!(false, "stuck on {:?}", g.edges()),
        }
    }

    #[test]
    fn potential_order_is_lexicographic(
        rho_a in prop::collection::vec(1usize..6, 0..3),
        rho_b in prop::collection::vec(1usize..6, 0..3),
        sigma_a in prop::collection::vec(0usize..6, 0..5),
        sigma_b in prop::collection::vec(0usize..6, 0..5),
    ) {
        let sorted = |mut v: Vec<usize>| { v.sort_unstable_by(|a, b| b.cmp(a)); v };
        let (ra, rb) = (sorted(rho_a), sorted(rho_b));
        let a = Potential::new(ra.clone(), sigma_a.clone());
        let b = Potential::new(rb.clone(), sigma_b.clone());
        let strip = |mut v: Vec<usize>| { while v.last() == Some(&0) { v.pop(); } v };
        let expected = ra.cmp(&rb).then(strip(sigma_a).cmp(&strip(sigma_b)));
        prop_assert_eq!(a.cmp(&b), expected);
    }

    #[test]
    fn graph_text_round_trips(seed in any::<u64>(), n in 1usize..12, extra in 0usize..15) {
        let mut r = rng(seed);
        let g = random_connected(&mut r, n, extra);
        let text = write_graph(&g, None);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(back.graph, g);
        prop_assert!(back.rotation.is_none());
    }

    #[test]
    fn rational_text_round_trips(p in -1000i64..1000, q in 1i64..1000) {
        let x = Rational::new(p, q);
        prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
        prop_assert!(Rational::integer(x.floor()) <= x && x <= Rational::integer(x.ceil()));
    }

    #[test]
    fn edge_connectivity_is_the_smallest_cut(seed in any::<u64>(), n in 2usize..9, extra in 0usize..14) {
        let mut r = rng(seed);
        let g = random_connected(&mut r, n, extra);
        let smallest = (1u32..(1 << (n - 1)))
            .map(|mask| {
                let side = |v: usize| v > 0 && mask >> (v - 1) & 1 == 1;
                g.edges().iter().filter(|&&(u, v)| side(u) != side(v)).count()
            })
            .min()
            .unwrap();
        prop_assert_eq!(edge_connectivity(&g).unwrap(), smallest);
    }

    #[test]
    fn sampled_cuts_never_beat_exhaustive(seed in any::<u64>(), n in 2usize..10, extra in 0usize..12) {
        let mut r = rng(seed);
        let g = random_connected(&mut r, n, extra);
        let tree: Vec<usize> = (0..n - 1).collect();
        let all = verify_thinness(&g, &tree, CutMode::Exhaustive).unwrap();
        let some = verify_thinness(&g, &tree, CutMode::Sampled { count: 40, seed }).unwrap();
        prop_assert!(some.max_ratio <= all.max_ratio);
        prop_assert_eq!(all.cuts_examined, (1u64 << (n - 1)) - 1);
    }

    #[test]
    fn arboricity_is_monotone(seed in any::<u64>(), n in 2usize..8, extra in 0usize..12) {
        let mut r = rng(seed);
        let g = random_connected(&mut r, n, extra);
        let fewer = MultiGraph::from_edges(n, &g.edges()[..n - 1]).unwrap();
        prop_assert!(fractional_arboricity(&fewer) <= fractional_arboricity(&g));
    }
}
