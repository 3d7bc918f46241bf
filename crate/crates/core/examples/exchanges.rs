//! The local operations: legal orders, exchanges, and special paths.

use std::sync::Arc;

use dragonforest::engine::{
    apply_special_path, can_exchange, classify_pair, find_minimal_special_path, minimal_legal_order,
    perform_exchange, potential,
};
use dragonforest::graph::{Decomposition, MultiGraph, OrientedTree};

fn main() {
    // Blue chain 0 <- 1 <- 2 <- 3 rooted at 0, red edge {3, 0}.
    let g = Arc::new(MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap());
    let t = OrientedTree::from_edges(&g, [0, 1, 2], 0).unwrap();
    let dec = Decomposition::new(g, 0, vec![t], [3].into_iter().collect());
    println!("can exchange parent edge of 1 with {{3,0}}: {}", can_exchange(dec.tree(0), 1, (3, 0)).unwrap());
    let after = perform_exchange(&dec, 0, 1, 3).unwrap();
    println!("after exchange: parents {:?}, red {:?}", after.tree(0).parents(), after.red());

    // Two leaves hanging off the root, joined by a red edge: Case 3.
    let g = Arc::new(MultiGraph::from_edges(3, &[(1, 0), (2, 0), (1, 2)]).unwrap());
    let t = OrientedTree::from_edges(&g, [0, 1], 0).unwrap();
    let dec = Decomposition::new(g, 0, vec![t], [2].into_iter().collect());
    let case = classify_pair(dec.tree(0), &dec.red_forest(), 1, 2).unwrap();
    println!("pair (1, 2): case {} {case:?}", case.number());

    // A component of two red edges with a blue edge leaving it into an
    // isolated vertex: the special path pulls that edge into red.
    let g = Arc::new(MultiGraph::from_edges(4, &[(1, 0), (2, 3), (3, 0), (0, 1), (1, 2)]).unwrap());
    let t = OrientedTree::from_edges(&g, [0, 1, 2], 0).unwrap();
    let dec = Decomposition::new(g, 0, vec![t], [3, 4].into_iter().collect());
    let order = minimal_legal_order(&dec, 0);
    println!("legal order sizes {:?}, potential {}", order.sizes(), potential(&dec, 0, 1));
    let path = find_minimal_special_path(&dec, &order, 1).unwrap();
    println!("special path {:?} releases red edge {}", path.vertices, path.red_edge);
    let out = apply_special_path(&dec, &order, &path).unwrap();
    println!("after augmentation: red {:?}, potential {}", out.red(), potential(&out, 0, 1));
}
