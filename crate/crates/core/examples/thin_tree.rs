//! A 5/6-thin spanning tree of the icosahedron, certified over every cut.

use dragonforest::planar::{dual_graph, edge_connectivity, girth, solids, thin_tree, CutMode};

fn main() {
    let ico = solids::icosahedron();
    let dual = dual_graph(&ico).unwrap();
    println!(
        "icosahedron: {} vertices, {} edges, edge connectivity {}",
        ico.graph().n(),
        ico.graph().m(),
        edge_connectivity(ico.graph()).unwrap()
    );
    println!("dual: {} faces, girth {:?}", dual.dual.n(), girth(&dual.dual));

    let cert = thin_tree(&ico, CutMode::Exhaustive).unwrap();
    println!("tree {:?}", cert.tree);
    println!("max share of a cut: {} (worst side {:?})", cert.max_ratio, cert.worst_cut);
    println!("{}", cert.to_json());

    match thin_tree(&solids::cube(), CutMode::Exhaustive) {
        Ok(_) => unreachable!("the cube is only 3-edge-connected"),
        Err(e) => println!("cube: {e}"),
    }
}
